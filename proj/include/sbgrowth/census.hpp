#pragma once

#include <gmpxx.h>

#include <vector>

#include "sbgrowth/words.hpp"

namespace sbgrowth {

/// Number of monoid elements of each length 0..kmax.
struct LengthCensus {
    int n = 2;
    MonoidKind kind = MonoidKind::Singular;
    std::vector<mpz_class> counts;
};

}  // namespace sbgrowth
