#pragma once

// Univariate polynomials and rational functions in t over the rationals.

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace sbgrowth {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpq_class> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const mpq_class& c);
    /// c * t^k
    static Polynomial monomial(int k, const mpq_class& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of t^i (zero past the degree).
    mpq_class operator[](int i) const;
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    const mpq_class& leading() const { return coeffs_.back(); }

    mpq_class eval_at(const mpq_class& t) const;
    double eval_real(double t) const;
    mpf_class eval_real(const mpf_class& t) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    /// Smallest positive rational multiple with integer, coprime coefficients
    /// (sign of the leading coefficient kept).
    std::vector<mpz_class> integer_coefficients() const;
    static Polynomial from_integers(const std::vector<mpz_class>& coeffs);

    /// "1 - 4t + 2t^2"
    std::string to_string(char var = 't') const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const mpq_class& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
    friend Polynomial operator-(Polynomial a) { return a *= mpq_class(-1); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// num/den in lowest terms. Canonical scaling: num and den jointly carry
/// coprime integer coefficients and den(0) > 0 (leading coefficient > 0 when
/// den(0) = 0).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial{1}) {}
    RationalFunction(Polynomial num, Polynomial den);
    RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial{1}) {}  // NOLINT
    static RationalFunction constant(const mpq_class& c) { return {Polynomial::constant(c)}; }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    mpq_class eval_at(const mpq_class& t) const;
    std::string to_string(char var = 't') const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Polynomial num_;
    Polynomial den_;
};

RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den);

/// First kmax+1 Taylor coefficients at t = 0. Throws PoleAtOrigin if den(0) = 0.
std::vector<mpq_class> series_expand(const RationalFunction& rf, int kmax);

/// b_k = sum_j coefficients[j-1] * b_{k-j}, holding for k >= valid_from.
struct Recurrence {
    std::vector<mpq_class> coefficients;
    int valid_from = 0;
    int numerator_degree = -1;
};

Recurrence recurrence_from(const RationalFunction& rf);

}  // namespace sbgrowth
