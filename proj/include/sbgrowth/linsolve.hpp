#pragma once

#include <vector>

#include "sbgrowth/polynomial.hpp"

namespace sbgrowth {

/// A * f = rhs over the field Q(t). labels[i] names unknown i (a syllable id).
struct LinearSystem {
    std::vector<std::vector<RationalFunction>> A;
    std::vector<RationalFunction> rhs;
    std::vector<int> labels;

    std::size_t size() const { return rhs.size(); }
};

/// Exact solution. Rows are cleared to Z[t], eliminated fraction-free
/// (Bareiss, lowest-degree pivot), back-substituted without fractions and
/// divided by the determinant at the end. Every solution is re-substituted
/// into the cleared system; throws SingularMatrix for a singular A.
std::vector<RationalFunction> solve_linear_system(const LinearSystem& sys);

/// True iff A * x == rhs exactly.
bool satisfies(const LinearSystem& sys, const std::vector<RationalFunction>& x);

}  // namespace sbgrowth
