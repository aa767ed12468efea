#pragma once

// Brute-force ground truth: monoid elements of length k are the classes of
// the m^k words of length k under the relation closure.

#include <cstdint>
#include <vector>

#include "sbgrowth/census.hpp"
#include "sbgrowth/words.hpp"

namespace sbgrowth {

inline constexpr std::uint64_t kDefaultWordBudget = 100'000'000;

struct OracleOptions {
    /// Largest m^k the oracle will scan for a single length.
    std::uint64_t word_budget = kDefaultWordBudget;
};

LengthCensus count_by_length(const Presentation& p, int kmax, OracleOptions opts = {});

/// Lexicographically smallest word of every class at length k, in sorted order.
std::vector<Word> enumerate_classes(const Presentation& p, int k, OracleOptions opts = {});

bool are_equivalent(const Word& a, const Word& b, const Presentation& p, OracleOptions opts = {});

/// Every word of the class of w, sorted.
std::vector<Word> equivalence_class(const Word& w, const Presentation& p, OracleOptions opts = {});

}  // namespace sbgrowth
