#include "zpoly.hpp"

#include <algorithm>
#include <utility>

#include "sbgrowth/error.hpp"

namespace sbgrowth::detail {

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    trim(out);
    return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

ZPoly cross(const ZPoly& a, const ZPoly& b, const ZPoly& c, const ZPoly& d) {
    std::size_t len = 0;
    if (!a.empty() && !b.empty()) len = a.size() + b.size() - 1;
    if (!c.empty() && !d.empty()) len = std::max(len, c.size() + d.size() - 1);
    ZPoly out(len);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j)
            mpz_submul(out[i + j].get_mpz_t(), c[i].get_mpz_t(), d[j].get_mpz_t());
    }
    trim(out);
    return out;
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    ZPoly rem = a;
    ZPoly q(a.size() - b.size() + 1);
    const mpz_class& lead = b.back();
    for (std::size_t i = q.size(); i-- > 0;) {
        mpz_class& top = rem[i + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
        mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(), b[j].get_mpz_t());
    }
    for (const auto& c : rem)
        if (c != 0) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    trim(q);
    return q;
}

mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.empty()) return {};
    mpz_class g = content(p);
    if (p.back() < 0) g = -g;
    ZPoly out = p;
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    ZPoly rem = a;
    const mpz_class lead = b.back();
    while (degree(rem) >= degree(b)) {
        const std::size_t shift = rem.size() - b.size();
        const mpz_class top = rem.back();
        for (auto& c : rem) c *= lead;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= top * b[j];
        trim(rem);
    }
    return rem;
}

ZPoly gcd(ZPoly a, ZPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace sbgrowth::detail
