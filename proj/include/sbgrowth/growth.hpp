#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbgrowth/automaton.hpp"
#include "sbgrowth/linsolve.hpp"
#include "sbgrowth/polynomial.hpp"

namespace sbgrowth {

/// Working precision (bits) for root polishing and residues.
inline constexpr mp_bitcnt_t kRootPrecision = 256;
inline constexpr double kDefaultRootTolerance = 1e-12;

/// The equations f_i / t^{l_i} = 1 + sum_j eps(i, j) f_j for every syllable
/// except the fundamental braid, each row multiplied by t^{l_i} and moved to
/// the form sum_j eps(i, j) t^{l_i} f_j - f_i = -t^{l_i}.
LinearSystem build_system(const Automaton& automaton);
LinearSystem build_system(int n, MonoidKind kind, int max_strands = kDefaultMaxStrands);

struct GeneratingFunction {
    int n = 2;
    MonoidKind kind = MonoidKind::Singular;
    RationalFunction rf;
    /// f_j for every syllable id, the fundamental braid included.
    std::map<int, RationalFunction> per_syllable;
};

GeneratingFunction generating_function(const Automaton& automaton);
GeneratingFunction generating_function(int n, MonoidKind kind, int max_strands = kDefaultMaxStrands);

struct RealRoot {
    /// Isolating interval with exact rational endpoints, lo <= root <= hi.
    mpq_class lo;
    mpq_class hi;
    mpf_class value{0, kRootPrecision};
    int multiplicity = 1;

    double approx() const { return value.get_d(); }
};

/// All real roots, ascending, each isolated by Sturm sequences, bisected to
/// width <= tol and polished by Newton steps inside its interval.
std::vector<RealRoot> isolate_real_roots(const Polynomial& p, double tol = kDefaultRootTolerance);

/// Number of distinct real roots in (lo, hi] of a squarefree polynomial.
int sturm_count(const Polynomial& squarefree, const mpq_class& lo, const mpq_class& hi);

struct CubicAnalysis {
    /// Depressed form y^3 + p y + q with t = y + shift.
    mpq_class p;
    mpq_class q;
    mpq_class shift;
    /// q^2/4 + p^3/27
    mpq_class discriminant_expr;
    int root_count = 0;
    /// Trigonometric roots (ascending) when three real roots exist.
    std::vector<double> trig_roots;
    /// Largest gap between trig_roots and the isolated roots.
    double trig_mismatch = 0.0;
};

CubicAnalysis cubic_analysis(const Polynomial& cubic);

struct Residue {
    mpf_class pole{0, kRootPrecision};
    /// Coefficient a in a / (pole - t).
    mpf_class coefficient{0, kRootPrecision};
};

struct GrowthReport {
    Polynomial denominator;
    std::vector<RealRoot> real_roots;
    bool has_residues = false;
    /// Why residues are absent, empty otherwise.
    std::string residue_note;
    std::vector<Residue> residues;
    mpf_class growth_rate{0, kRootPrecision};
    Recurrence recurrence;
    /// Present when the denominator is (1 - t)^a times a cubic.
    std::optional<CubicAnalysis> cubic;
};

GrowthReport growth_report(const RationalFunction& rf, double tol = kDefaultRootTolerance);
inline GrowthReport growth_report(const GeneratingFunction& gf, double tol = kDefaultRootTolerance) {
    return growth_report(gf.rf, tol);
}

}  // namespace sbgrowth
