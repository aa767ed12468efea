#include "sbgrowth/linsolve.hpp"

#include <string>
#include <utility>

#include "sbgrowth/error.hpp"
#include "zpoly.hpp"

namespace sbgrowth {

namespace {

using detail::ZPoly;
using ZMatrix = std::vector<std::vector<ZPoly>>;

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    Polynomial g = gcd(a, b);
    return divrem(a * b, g).first;
}

/// Row i of [A | rhs] scaled by a common multiple of its denominators and
/// then to integer coefficients.
std::vector<ZPoly> clear_row(const std::vector<RationalFunction>& row, const RationalFunction& rhs) {
    Polynomial common{1};
    for (const auto& e : row) common = lcm(common, e.den());
    common = lcm(common, rhs.den());

    std::vector<Polynomial> polys;
    polys.reserve(row.size() + 1);
    auto scaled = [&](const RationalFunction& e) {
        auto [q, r] = divrem(common, e.den());
        return e.num() * q;
    };
    for (const auto& e : row) polys.push_back(scaled(e));
    polys.push_back(scaled(rhs));

    mpz_class scale = 1;
    for (const auto& p : polys)
        for (const auto& c : p.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    std::vector<ZPoly> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        ZPoly z;
        z.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) z.emplace_back(c.get_num() * (scale / c.get_den()));
        out.push_back(std::move(z));
    }
    return out;
}

Polynomial to_poly(const ZPoly& z) { return Polynomial::from_integers(z); }

}  // namespace

std::vector<RationalFunction> solve_linear_system(const LinearSystem& sys) {
    const std::size_t n = sys.size();
    if (sys.A.size() != n) throw Error(ErrorCode::InvalidArgument, "matrix and right-hand side disagree in size");
    for (const auto& row : sys.A)
        if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
    if (n == 0) return {};

    ZMatrix m;
    m.reserve(n);
    for (std::size_t i = 0; i < n; ++i) m.push_back(clear_row(sys.A[i], sys.rhs[i]));
    const ZMatrix original = m;

    ZPoly prev_pivot{1};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i) {
            if (m[i][k].empty()) continue;
            if (best == n || detail::degree(m[i][k]) < detail::degree(m[best][k])) best = i;
        }
        if (best == n)
            throw Error(ErrorCode::SingularMatrix, "singular system at column " + std::to_string(k));
        std::swap(m[k], m[best]);
        const ZPoly& pivot = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const ZPoly lead = m[i][k];
            for (std::size_t j = k + 1; j <= n; ++j) {
                ZPoly v = detail::cross(pivot, m[i][j], lead, m[k][j]);
                m[i][j] = detail::exact_div(v, prev_pivot);
            }
            m[i][k].clear();
        }
        prev_pivot = pivot;
    }

    // y_i = det * x_i stays in Z[t].
    const ZPoly det = m[n - 1][n - 1];
    std::vector<ZPoly> y(n);
    for (std::size_t i = n; i-- > 0;) {
        ZPoly acc = detail::mul(det, m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc = detail::sub(acc, detail::mul(m[i][j], y[j]));
        y[i] = detail::exact_div(acc, m[i][i]);
    }

    for (std::size_t i = 0; i < n; ++i) {
        ZPoly lhs;
        for (std::size_t j = 0; j < n; ++j) {
            ZPoly term = detail::mul(original[i][j], y[j]);
            lhs.resize(std::max(lhs.size(), term.size()));
            for (std::size_t c = 0; c < term.size(); ++c) lhs[c] += term[c];
        }
        detail::trim(lhs);
        if (detail::sub(lhs, detail::mul(det, original[i][n])).size() != 0)
            throw Error(ErrorCode::SingularMatrix, "re-substitution failed in row " + std::to_string(i));
    }

    const Polynomial det_poly = to_poly(det);
    std::vector<RationalFunction> x;
    x.reserve(n);
    for (const auto& yi : y) x.emplace_back(to_poly(yi), det_poly);
    return x;
}

bool satisfies(const LinearSystem& sys, const std::vector<RationalFunction>& x) {
    if (x.size() != sys.size()) return false;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        RationalFunction acc;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!sys.A[i][j].is_zero()) acc += sys.A[i][j] * x[j];
        if (!(acc == sys.rhs[i])) return false;
    }
    return true;
}

}  // namespace sbgrowth
