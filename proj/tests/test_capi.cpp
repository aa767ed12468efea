#include "doctest.h"

#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "sbgrowth/sbgrowth.h"

namespace {

std::vector<std::string> terms(const sbg_series* s) {
    std::vector<std::string> out;
    for (size_t k = 0; k < sbg_series_size(s); ++k) out.emplace_back(sbg_series_term(s, k));
    return out;
}

std::vector<std::string> series_of(int n, sbg_kind kind, sbg_method method, int k) {
    sbg_series* s = nullptr;
    REQUIRE(sbg_series_compute(n, kind, method, k, nullptr, &s) == SBG_OK);
    auto out = terms(s);
    sbg_series_destroy(s);
    return out;
}

std::string run(const std::string& cmd) {
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
    return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("series by all three methods") {
    const std::vector<std::string> expected = {"1", "4", "14", "45", "142", "444"};
    CHECK(series_of(3, SBG_SINGULAR, SBG_METHOD_GENFUNC, 5) == expected);
    CHECK(series_of(3, SBG_SINGULAR, SBG_METHOD_DP, 5) == expected);
    CHECK(series_of(3, SBG_SINGULAR, SBG_METHOD_ORACLE, 5) == expected);
    CHECK(series_of(2, SBG_SINGULAR, SBG_METHOD_GENFUNC, 3) == std::vector<std::string>{"1", "2", "3", "4"});
}

TEST_CASE("methods agree for classical monoids") {
    for (int n = 2; n <= 4; ++n) {
        const auto g = series_of(n, SBG_CLASSICAL, SBG_METHOD_GENFUNC, 7);
        CHECK(g == series_of(n, SBG_CLASSICAL, SBG_METHOD_DP, 7));
        CHECK(g == series_of(n, SBG_CLASSICAL, SBG_METHOD_ORACLE, 7));
    }
}

TEST_CASE("generating function handle") {
    sbg_genfunc* gf = nullptr;
    REQUIRE(sbg_genfunc_compute(3, SBG_SINGULAR, nullptr, &gf) == SBG_OK);
    REQUIRE(sbg_genfunc_numerator_size(gf) == 1);
    CHECK(std::string(sbg_genfunc_numerator_coeff(gf, 0)) == "1");
    std::vector<std::string> den;
    for (size_t i = 0; i < sbg_genfunc_denominator_size(gf); ++i) den.emplace_back(sbg_genfunc_denominator_coeff(gf, i));
    CHECK(den == std::vector<std::string>{"1", "-4", "2", "3", "-2"});
    CHECK(sbg_genfunc_denominator_coeff(gf, 99) == nullptr);
    CHECK(std::string(sbg_genfunc_string(gf)) == "(1) / (1 - 4t + 2t^2 + 3t^3 - 2t^4)");
    CHECK(sbg_genfunc_syllable_count(gf) == 7);
    CHECK(sbg_genfunc_syllable_id(gf, 0) == 2);

    sbg_growth* g = nullptr;
    REQUIRE(sbg_growth_compute(gf, 1e-12, &g) == SBG_OK);
    CHECK(sbg_growth_root_count(g) == 4);
    CHECK(sbg_growth_root_value(g, 1) == doctest::Approx(0.3210368161));
    CHECK(sbg_growth_has_residues(g) == 1);
    CHECK(sbg_growth_residue_coefficient(g, 2) == doctest::Approx(-1.0));
    CHECK(sbg_growth_rate(g) == doctest::Approx(3.1149075415));
    CHECK(sbg_growth_recurrence_size(g) == 4);
    CHECK(sbg_growth_recurrence_valid_from(g) == 1);
    REQUIRE(sbg_growth_has_cubic(g) == 1);
    CHECK(std::string(sbg_growth_cubic_p(g)) == "-19/12");
    CHECK(std::string(sbg_growth_cubic_q(g)) == "13/54");
    CHECK(sbg_growth_cubic_root_count(g) == 3);
    sbg_growth_destroy(g);
    sbg_genfunc_destroy(gf);
}

TEST_CASE("generating function from coefficients") {
    const char* num[] = {"1"};
    const char* den[] = {"1", "-1", "-1"};
    sbg_genfunc* gf = nullptr;
    REQUIRE(sbg_genfunc_from_coefficients(num, 1, den, 3, &gf) == SBG_OK);
    sbg_series* s = nullptr;
    REQUIRE(sbg_genfunc_expand(gf, 6, &s) == SBG_OK);
    CHECK(terms(s) == std::vector<std::string>{"1", "1", "2", "3", "5", "8", "13"});
    sbg_series_destroy(s);
    sbg_genfunc_destroy(gf);

    const char* bad[] = {"1", "x"};
    CHECK(sbg_genfunc_from_coefficients(num, 1, bad, 2, &gf) == SBG_ERR_INVALID_ARGUMENT);
    CHECK(gf == nullptr);
    CHECK(std::string(sbg_last_error()).find("bad integer") != std::string::npos);
    CHECK(sbg_genfunc_from_coefficients(num, 1, den, 0, &gf) == SBG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("automaton handle") {
    sbg_automaton* a = nullptr;
    REQUIRE(sbg_automaton_create(3, SBG_SINGULAR, nullptr, &a) == SBG_OK);
    CHECK(sbg_automaton_delta_id(a) == 6);
    REQUIRE(sbg_automaton_syllable_count(a) == 7);
    CHECK(std::string(sbg_automaton_syllable_word(a, 4)) == "s1s2s1");
    CHECK(sbg_automaton_syllable_length(a, 4) == 3);
    CHECK(sbg_automaton_pred_count(a, 5) == 3);
    CHECK(sbg_automaton_pred_id(a, 5, 0) == 3);
    CHECK(sbg_automaton_epsilon(a, 7, 3) == 1);
    CHECK(sbg_automaton_epsilon(a, 7, 2) == 0);
    CHECK(sbg_automaton_epsilon(a, 7, 42) == -1);
    sbg_automaton_destroy(a);
}

TEST_CASE("oracle handles") {
    sbg_classes* c = nullptr;
    REQUIRE(sbg_oracle_classes(3, SBG_SINGULAR, 2, nullptr, &c) == SBG_OK);
    CHECK(sbg_classes_size(c) == 14);
    CHECK(std::string(sbg_classes_word(c, 0)) == "s1s1");
    sbg_classes_destroy(c);

    int eq = -1;
    REQUIRE(sbg_oracle_equivalent(3, SBG_SINGULAR, "s1s2x1", "x2s1s2", nullptr, &eq) == SBG_OK);
    CHECK(eq == 1);
    REQUIRE(sbg_oracle_equivalent(3, SBG_SINGULAR, "x1x2", "x2x1", nullptr, &eq) == SBG_OK);
    CHECK(eq == 0);
    CHECK(sbg_oracle_equivalent(3, SBG_SINGULAR, "s9", "s1", nullptr, &eq) == SBG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify report") {
    sbg_report* r = nullptr;
    REQUIRE(sbg_verify(3, 6, nullptr, &r) == SBG_OK);
    CHECK(sbg_report_passed(r) == 1);
    CHECK(sbg_report_check_count(r) > 10);
    for (size_t i = 0; i < sbg_report_check_count(r); ++i) CHECK(sbg_report_check_passed(r, i) == 1);
    sbg_report_destroy(r);
}

TEST_CASE("error statuses") {
    sbg_series* s = nullptr;
    CHECK(sbg_series_compute(1, SBG_SINGULAR, SBG_METHOD_DP, 3, nullptr, &s) == SBG_ERR_INVALID_STRANDS);
    CHECK(s == nullptr);
    CHECK(sbg_series_compute(6, SBG_SINGULAR, SBG_METHOD_DP, 3, nullptr, &s) == SBG_ERR_INVALID_STRANDS);
    CHECK(sbg_series_compute(3, SBG_SINGULAR, SBG_METHOD_DP, -1, nullptr, &s) == SBG_ERR_INVALID_ARGUMENT);
    CHECK(sbg_series_compute(3, static_cast<sbg_kind>(7), SBG_METHOD_DP, 3, nullptr, &s) == SBG_ERR_INVALID_ARGUMENT);
    CHECK(sbg_series_compute(3, SBG_SINGULAR, SBG_METHOD_DP, 3, nullptr, nullptr) == SBG_ERR_INVALID_ARGUMENT);
    const sbg_options tight{1000, 0};
    CHECK(sbg_series_compute(3, SBG_SINGULAR, SBG_METHOD_ORACLE, 6, &tight, &s) == SBG_ERR_RESOURCE_LIMIT);
    CHECK(std::string(sbg_last_error()).find("budget") != std::string::npos);
    CHECK(std::string(sbg_status_name(SBG_ERR_RESOURCE_LIMIT)) == "resource limit");
    CHECK(sbg_series_size(nullptr) == 0);
    sbg_series_destroy(nullptr);
}

TEST_CASE("json round trip through the command line tool") {
    using nlohmann::json;
    const std::string cli = SBGROWTH_CLI_PATH;
    for (const char* kind : {"singular", "classical"})
        for (int n = 2; n <= 4; ++n) {
            const std::string args = " --n " + std::to_string(n) + " --kind " + kind;
            const json doc = json::parse(run(cli + " genfunc --format json" + args));
            CHECK(doc["command"] == "genfunc");
            CHECK(doc["n"] == n);
            CHECK(doc["kind"] == kind);
            std::vector<std::string> num, den;
            for (const auto& v : doc["numerator"]) num.push_back(std::to_string(v.get<long long>()));
            for (const auto& v : doc["denominator"]) den.push_back(std::to_string(v.get<long long>()));
            std::vector<const char*> np, dp;
            for (const auto& v : num) np.push_back(v.c_str());
            for (const auto& v : den) dp.push_back(v.c_str());
            sbg_genfunc* gf = nullptr;
            REQUIRE(sbg_genfunc_from_coefficients(np.data(), np.size(), dp.data(), dp.size(), &gf) == SBG_OK);
            sbg_series* s = nullptr;
            REQUIRE(sbg_genfunc_expand(gf, 12, &s) == SBG_OK);
            std::string joined;
            for (const auto& v : terms(s)) joined += (joined.empty() ? "" : ",") + v;
            CHECK(joined + "\n" == run(cli + " series --terms 12" + args));
            sbg_series_destroy(s);
            sbg_genfunc_destroy(gf);
        }
}

}
