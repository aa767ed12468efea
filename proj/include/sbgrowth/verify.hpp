#pragma once

#include <string>
#include <vector>

#include "sbgrowth/automaton.hpp"
#include "sbgrowth/oracle.hpp"

namespace sbgrowth {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    int n = 0;
    int maxlen = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Generating-function expansion vs automaton counts vs oracle counts through
/// maxlen for both monoid kinds, solved-system invariants, and the known
/// closed forms for n = 2 and n = 3.
VerifyReport verify(int n, int maxlen, OracleOptions oracle = {}, int max_strands = kDefaultMaxStrands);

}  // namespace sbgrowth
