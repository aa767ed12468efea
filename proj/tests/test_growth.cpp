#include "doctest.h"

#include <cmath>

#include "sbgrowth/error.hpp"
#include "sbgrowth/growth.hpp"
#include "sbgrowth/oracle.hpp"

using namespace sbgrowth;

namespace {

const Polynomial kCubic{1, -3, -1, 2};

RationalFunction n3_closed_form() { return {Polynomial{1}, Polynomial{1, -1} * kCubic}; }

}  // namespace

TEST_SUITE("growth") {

TEST_CASE("system rows for n=3") {
    const LinearSystem sys = build_system(3, MonoidKind::Singular);
    CHECK(sys.size() == 6);
    CHECK(sys.labels == std::vector<int>{2, 3, 4, 5, 7, 8});
    // Row of x1 (Pred {3,7,8}): t f_3 + (t - 1) f_7 + t f_8 = -t.
    const std::size_t row = 4;
    CHECK(sys.A[row][0] == RationalFunction());
    CHECK(sys.A[row][1] == RationalFunction(Polynomial{0, 1}));
    CHECK(sys.A[row][4] == RationalFunction(Polynomial{-1, 1}));
    CHECK(sys.A[row][5] == RationalFunction(Polynomial{0, 1}));
    CHECK(sys.rhs[row] == RationalFunction(Polynomial{0, -1}));
    // Row of s1s2 (Pred {2,5,7,8}) has t^2 entries.
    CHECK(sys.A[2][0] == RationalFunction(Polynomial{0, 0, 1}));
    CHECK(sys.A[2][2] == RationalFunction(Polynomial{-1}));
}

TEST_CASE("n=3 singular generating function") {
    const GeneratingFunction gf = generating_function(3, MonoidKind::Singular);
    CHECK(gf.rf == n3_closed_form());
    CHECK(gf.rf.num() == Polynomial{1});
    CHECK(gf.rf.den() == Polynomial{1, -4, 2, 3, -2});
    const auto& f = gf.per_syllable;
    REQUIRE(f.size() == 7);
    CHECK(f.at(4) == RationalFunction(Polynomial{0, 1}) * f.at(2));
    CHECK(f.at(5) == RationalFunction(Polynomial{0, 1}) * f.at(3));
    CHECK(f.at(2) == f.at(3));
    CHECK(f.at(7) == f.at(8));
    CHECK(f.at(2) == RationalFunction(Polynomial{0, 1}, kCubic));
    CHECK(f.at(7) == RationalFunction(Polynomial{0, 1, 0, -1}, kCubic));
    CHECK(f.at(6) == RationalFunction(Polynomial{0, 0, 0, 1}, Polynomial{1, -1} * kCubic));
}

TEST_CASE("generating functions of small monoids") {
    CHECK(generating_function(2, MonoidKind::Singular).rf == RationalFunction(Polynomial{1}, Polynomial{1, -2, 1}));
    CHECK(generating_function(2, MonoidKind::Classical).rf == RationalFunction(Polynomial{1}, Polynomial{1, -1}));
    CHECK(generating_function(3, MonoidKind::Classical).rf ==
          RationalFunction(Polynomial{1}, Polynomial{1, -1} * Polynomial{1, -1, -1}));
    CHECK(generating_function(4, MonoidKind::Classical).rf ==
          RationalFunction(Polynomial{1}, Polynomial{1, -3, 1, 2, 0, 0, -1}));
}

TEST_CASE("solved systems re-substitute and are flip symmetric") {
    for (int n = 2; n <= 4; ++n)
        for (auto kind : {MonoidKind::Singular, MonoidKind::Classical}) {
            const Automaton a(n, kind);
            const auto sys = build_system(a);
            const auto gf = generating_function(a);
            std::vector<RationalFunction> x;
            for (int id : sys.labels) x.push_back(gf.per_syllable.at(id));
            CHECK(satisfies(sys, x));
            RationalFunction total = RationalFunction::constant(1);
            for (const auto& [id, rf] : gf.per_syllable) {
                CHECK(gf.per_syllable.at(a.flip_id(id)) == rf);
                total += rf;
            }
            CHECK(total == gf.rf);
        }
}

TEST_CASE("expansion equals the automaton count") {
    for (int n = 2; n <= 4; ++n)
        for (auto kind : {MonoidKind::Singular, MonoidKind::Classical}) {
            const Automaton a(n, kind);
            const auto b = series_expand(generating_function(a).rf, 12);
            const auto dp = a.count(12).counts;
            for (int k = 0; k <= 12; ++k) CHECK(b[k] == mpq_class(dp[k]));
        }
}

TEST_CASE("real roots of the cubic") {
    const auto roots = isolate_real_roots(kCubic);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].approx() == doctest::Approx(-1.161702138).epsilon(1e-9));
    CHECK(roots[1].approx() == doctest::Approx(0.3210368161).epsilon(1e-9));
    CHECK(roots[2].approx() == doctest::Approx(1.340665322).epsilon(1e-9));
    for (const auto& r : roots) {
        CHECK(r.lo <= r.hi);
        CHECK(r.hi - r.lo <= mpq_class(1e-12));
        CHECK(mpf_class(r.lo, kRootPrecision) <= r.value);
        CHECK(r.value <= mpf_class(r.hi, kRootPrecision));
        CHECK(abs(kCubic.eval_real(r.value)) < mpf_class(1e-60, kRootPrecision));
    }
    // Vieta: r1 + r2 + r3 = 1/2, r1 r2 r3 = -1/2.
    const mpf_class sum = roots[0].value + roots[1].value + roots[2].value;
    const mpf_class prod = roots[0].value * roots[1].value * roots[2].value;
    CHECK(abs(sum - mpf_class(0.5)) < mpf_class(1e-60, kRootPrecision));
    CHECK(abs(prod + mpf_class(0.5)) < mpf_class(1e-60, kRootPrecision));
}

TEST_CASE("roots with multiplicity and exact rational roots") {
    const auto r = isolate_real_roots(Polynomial{1, -2, 1} * Polynomial{-2, 1});
    REQUIRE(r.size() == 2);
    CHECK(r[0].approx() == doctest::Approx(1.0));
    CHECK(r[0].multiplicity == 2);
    CHECK(r[1].approx() == doctest::Approx(2.0));
    CHECK(r[1].multiplicity == 1);
    CHECK(isolate_real_roots(Polynomial{1, 0, 1}).empty());
    CHECK_THROWS_AS(isolate_real_roots(Polynomial()), Error);
    CHECK_THROWS_AS(isolate_real_roots(kCubic, 0.0), Error);
}

TEST_CASE("sturm counts") {
    CHECK(sturm_count(kCubic, -2, 2) == 3);
    CHECK(sturm_count(kCubic, 0, 1) == 1);
    CHECK(sturm_count(kCubic, 2, 3) == 0);
}

TEST_CASE("tolerance controls the isolating width") {
    for (double tol : {1e-3, 1e-8, 1e-15}) {
        for (const auto& r : isolate_real_roots(kCubic, tol)) CHECK(r.hi - r.lo <= mpq_class(tol));
    }
}

TEST_CASE("depressed cubic") {
    const CubicAnalysis c = cubic_analysis(Polynomial{1, -3, -1, 2});
    CHECK(c.p == mpq_class(-19, 12));
    CHECK(c.q == mpq_class(13, 54));
    CHECK(c.shift == mpq_class(1, 6));
    CHECK(c.discriminant_expr < 0);
    CHECK(c.root_count == 3);
    REQUIRE(c.trig_roots.size() == 3);
    CHECK(c.trig_mismatch < 1e-12);
    CHECK(c.trig_roots[1] == doctest::Approx(0.3210368161).epsilon(1e-9));
    CHECK(cubic_analysis(Polynomial{-1, 0, 0, 1}).root_count == 1);
    CHECK_THROWS_AS(cubic_analysis(Polynomial{1, 1}), Error);
}

TEST_CASE("partial fractions for n=3") {
    const GrowthReport rep = growth_report(n3_closed_form());
    REQUIRE(rep.has_residues);
    REQUIRE(rep.residues.size() == 4);
    const double expected_pole[] = {-1.161702138, 0.3210368161, 1.0, 1.340665322};
    const double expected_a[] = {-0.06233879045, 0.4870988600, -1.0, 0.5752399310};
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(rep.residues[i].pole.get_d() - expected_pole[i]) < 1e-8);
        CHECK(std::abs(rep.residues[i].coefficient.get_d() - expected_a[i]) < 1e-8);
    }
    mpf_class sum(0, kRootPrecision);
    for (const auto& r : rep.residues) sum += r.coefficient / r.pole;
    CHECK(abs(sum - 1) < mpf_class(1e-60, kRootPrecision));  // f(0) = 1
    CHECK(rep.growth_rate.get_d() == doctest::Approx(1.0 / 0.3210368162407501));
    REQUIRE(rep.cubic.has_value());
    CHECK(rep.cubic->p == mpq_class(-19, 12));
}

TEST_CASE("residues reconstruct the coefficients") {
    const GrowthReport rep = growth_report(n3_closed_form());
    const auto b = series_expand(n3_closed_form(), 25);
    for (int k = 0; k <= 25; ++k) {
        mpf_class approx(0, kRootPrecision);
        for (const auto& r : rep.residues) {
            mpf_class power(1, kRootPrecision);
            for (int j = 0; j <= k; ++j) power *= r.pole;
            approx += r.coefficient / power;
        }
        CHECK(abs(approx - mpf_class(b[k], kRootPrecision)) < mpf_class(1e-40, kRootPrecision));
    }
}

TEST_CASE("growth report without residues") {
    const GrowthReport rep = growth_report(RationalFunction(Polynomial{1}, Polynomial{1, -2, 1}));
    CHECK_FALSE(rep.has_residues);
    CHECK(rep.residue_note == "repeated pole");
    CHECK(rep.growth_rate.get_d() == doctest::Approx(1.0));
    const GrowthReport complex = growth_report(RationalFunction(Polynomial{1}, Polynomial{1, 0, 1}));
    CHECK(complex.residue_note == "non-real poles");
    const GrowthReport none = growth_report(RationalFunction(Polynomial{1, 1}));
    CHECK(none.residue_note == "no poles");
}

TEST_CASE("classical growth rate is the golden ratio") {
    const GrowthReport rep = growth_report(generating_function(3, MonoidKind::Classical));
    CHECK(std::abs(rep.growth_rate.get_d() - (1 + std::sqrt(5.0)) / 2) < 1e-12);
}

TEST_CASE("ratio test approaches the growth rate") {
    const auto rf = generating_function(3, MonoidKind::Singular).rf;
    const auto b = series_expand(rf, 60);
    const double rate = growth_report(rf).growth_rate.get_d();
    CHECK(std::abs(mpq_class(b[60] / b[59]).get_d() - rate) < 1e-6);
}

TEST_CASE("n=5 classical agrees with the oracle") {
    const auto b = series_expand(generating_function(5, MonoidKind::Classical).rf, 5);
    const auto o = count_by_length(build_presentation(5, MonoidKind::Classical), 5).counts;
    for (int k = 0; k <= 5; ++k) CHECK(b[k] == mpq_class(o[k]));
}

}
