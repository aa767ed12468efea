#pragma once

// Integer-coefficient polynomials for the fraction-free kernels (Bareiss
// elimination, primitive remainder sequences). Ascending coefficients, no
// trailing zeros.

#include <gmpxx.h>

#include <vector>

namespace sbgrowth::detail {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p);
inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
/// a*b - c*d, the Bareiss cross term.
ZPoly cross(const ZPoly& a, const ZPoly& b, const ZPoly& c, const ZPoly& d);
/// a / b when b divides a exactly over Z[t]; throws otherwise.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);

mpz_class content(const ZPoly& p);
/// Divides out the content and makes the leading coefficient positive.
ZPoly primitive_part(const ZPoly& p);
/// Pseudo-remainder of a by b (b nonzero).
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
ZPoly gcd(ZPoly a, ZPoly b);

}  // namespace sbgrowth::detail
