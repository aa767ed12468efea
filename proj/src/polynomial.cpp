#include "sbgrowth/polynomial.hpp"

#include <algorithm>

#include "sbgrowth/error.hpp"
#include "zpoly.hpp"

namespace sbgrowth {

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::constant(const mpq_class& c) { return Polynomial(std::vector<mpq_class>{c}); }

Polynomial Polynomial::monomial(int k, const mpq_class& c) {
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class Polynomial::operator[](int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

mpq_class Polynomial::eval_at(const mpq_class& t) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double Polynomial::eval_real(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

mpf_class Polynomial::eval_real(const mpf_class& t) const {
    mpf_class acc(0, t.get_prec());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + mpf_class(*it, t.get_prec());
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpq_class> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial out = *this;
    mpq_class inv = 1 / leading();
    return out *= inv;
}

std::vector<mpz_class> Polynomial::integer_coefficients() const {
    mpz_class scale = 1;
    for (const auto& c : coeffs_) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    detail::ZPoly z;
    z.reserve(coeffs_.size());
    for (const auto& c : coeffs_) z.emplace_back(c.get_num() * (scale / c.get_den()));
    mpz_class g = detail::content(z);
    if (g > 1)
        for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return z;
}

Polynomial Polynomial::from_integers(const std::vector<mpz_class>& coeffs) {
    std::vector<mpq_class> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.emplace_back(c);
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpq_class& c = coeffs_[i];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<mpq_class> rem = a.coeffs();
    std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const mpq_class inv_lead = 1 / b.leading();
    const auto bsize = b.coeffs().size();
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpq_class q = rem[i + bsize - 1] * inv_lead;
        if (q == 0) continue;
        quot[i] = q;
        for (std::size_t j = 0; j < bsize; ++j) rem[i + j] -= q * b.coeffs()[j];
    }
    rem.resize(bsize - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    detail::ZPoly g = detail::gcd(a.integer_coefficients(), b.integer_coefficients());
    return Polynomial::from_integers(g).monic();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Polynomial{1};
        return;
    }
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
        num = divrem(num, g).first;
        den = divrem(den, g).first;
    }
    // Joint integer scaling with overall content 1.
    mpz_class scale = 1;
    for (const auto* p : {&num, &den})
        for (const auto& c : p->coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    mpz_class g_int = 0;
    for (const auto* p : {&num, &den})
        for (const auto& c : p->coeffs()) {
            mpz_class v = c.get_num() * (scale / c.get_den());
            mpz_gcd(g_int.get_mpz_t(), g_int.get_mpz_t(), v.get_mpz_t());
        }
    mpq_class factor(scale, g_int);
    factor.canonicalize();
    const mpq_class& sign_ref = den[0] != 0 ? den.coeffs().front() : den.leading();
    if (sign_ref < 0) factor = -factor;
    num_ = num * factor;
    den_ = den * factor;
}

RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) { return {num, den}; }

mpq_class RationalFunction::eval_at(const mpq_class& t) const {
    mpq_class d = den_.eval_at(t);
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "evaluation at a pole");
    return num_.eval_at(t) / d;
}

std::string RationalFunction::to_string(char var) const {
    if (is_polynomial() && den_[0] == 1) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) return *this = RationalFunction(num_ + o.num_, den_);
    return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    if (den_ == o.den_) return *this = RationalFunction(num_ - o.num_, den_);
    return *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
    return *this = RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::vector<mpq_class> series_expand(const RationalFunction& rf, int kmax) {
    const Polynomial& num = rf.num();
    const Polynomial& den = rf.den();
    if (den[0] == 0) throw Error(ErrorCode::PoleAtOrigin, "denominator vanishes at t = 0");
    if (kmax < 0) return {};
    const mpq_class inv0 = 1 / den[0];
    const int dd = den.degree();
    std::vector<mpq_class> out(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        mpq_class acc = num[k];
        for (int j = 1; j <= std::min(k, dd); ++j)
            acc -= den.coeffs()[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc * inv0;
    }
    return out;
}

Recurrence recurrence_from(const RationalFunction& rf) {
    const Polynomial& den = rf.den();
    if (den[0] == 0) throw Error(ErrorCode::PoleAtOrigin, "denominator vanishes at t = 0");
    Recurrence rec;
    for (int j = 1; j <= den.degree(); ++j) rec.coefficients.push_back(-den[j] / den[0]);
    rec.numerator_degree = rf.num().degree();
    rec.valid_from = rec.numerator_degree + 1;
    return rec;
}

}  // namespace sbgrowth
