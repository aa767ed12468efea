#include "sbgrowth/verify.hpp"

#include <algorithm>
#include <sstream>

#include "sbgrowth/error.hpp"
#include "sbgrowth/growth.hpp"

namespace sbgrowth {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string join(const std::vector<mpz_class>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out;
}

std::vector<mpz_class> integer_series(const RationalFunction& rf, int kmax, bool& integral) {
    integral = true;
    std::vector<mpz_class> out;
    for (const auto& c : series_expand(rf, kmax)) {
        if (c.get_den() != 1 || c < 0) integral = false;
        out.push_back(c.get_num());
    }
    return out;
}

std::string first_diff(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
        if (a[k] != b[k]) return "first difference at k=" + std::to_string(k);
    return "";
}

void agreement_checks(VerifyReport& rep, int n, MonoidKind kind, int maxlen, const OracleOptions& oracle,
                      int max_strands) {
    const std::string tag = std::string(to_string(kind));
    const Automaton automaton(n, kind, max_strands);
    const GeneratingFunction gf = generating_function(automaton);

    bool integral = false;
    const auto from_gf = integer_series(gf.rf, maxlen, integral);
    const auto from_dp = automaton.count(maxlen).counts;
    rep.checks.push_back({tag + ": series coefficients are non-negative integers", integral, join(from_gf)});

    std::vector<mpz_class> from_oracle;
    std::string oracle_error;
    try {
        from_oracle = count_by_length(build_presentation(n, kind), maxlen, oracle).counts;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ResourceLimit) throw;
        oracle_error = e.what();
    }

    {
        std::ostringstream d;
        d << "genfunc " << join(from_gf) << " | dp " << join(from_dp);
        if (from_gf != from_dp) d << " | " << first_diff(from_gf, from_dp);
        rep.checks.push_back({tag + ": genfunc expansion = automaton dp", from_gf == from_dp, d.str()});
    }
    {
        std::ostringstream d;
        bool ok = oracle_error.empty() && from_dp == from_oracle;
        if (!oracle_error.empty()) d << oracle_error;
        else {
            d << "dp " << join(from_dp) << " | oracle " << join(from_oracle);
            if (!ok) d << " | " << first_diff(from_dp, from_oracle);
        }
        rep.checks.push_back({tag + ": automaton dp = oracle", ok, d.str()});
    }

    const LinearSystem sys = build_system(automaton);
    std::vector<RationalFunction> f;
    for (int id : sys.labels) f.push_back(gf.per_syllable.at(id));
    rep.checks.push_back({tag + ": solution re-substitutes exactly", satisfies(sys, f), ""});

    std::string asym;
    for (const auto& [id, rf] : gf.per_syllable) {
        int image = automaton.flip_id(id);
        if (!(gf.per_syllable.at(image) == rf)) {
            asym = "f_" + std::to_string(id) + " != f_" + std::to_string(image);
            break;
        }
    }
    rep.checks.push_back({tag + ": flip symmetry f_j = f_flip(j)", asym.empty(), asym});

    RationalFunction total = RationalFunction::constant(1);
    for (const auto& [id, rf] : gf.per_syllable) total += rf;
    rep.checks.push_back({tag + ": f = 1 + sum_j f_j", total == gf.rf, gf.rf.to_string()});
}

}  // namespace

VerifyReport verify(int n, int maxlen, OracleOptions oracle, int max_strands) {
    if (maxlen < 0) throw Error(ErrorCode::InvalidArgument, "maxlen must be non-negative");
    VerifyReport rep;
    rep.n = n;
    rep.maxlen = maxlen;
    agreement_checks(rep, n, MonoidKind::Singular, maxlen, oracle, max_strands);
    agreement_checks(rep, n, MonoidKind::Classical, maxlen, oracle, max_strands);

    if (n == 2) {
        auto gf = generating_function(2, MonoidKind::Singular, max_strands);
        RationalFunction expected(Polynomial{1}, Polynomial{1, -2, 1});
        rep.checks.push_back({"singular n=2: f = 1/(1-t)^2", gf.rf == expected, gf.rf.to_string()});
    }
    if (n == 3) {
        auto gf = generating_function(3, MonoidKind::Singular, max_strands);
        RationalFunction expected(Polynomial{1}, Polynomial{1, -1} * Polynomial{1, -3, -1, 2});
        rep.checks.push_back(
            {"singular n=3: f = 1/((1-t)(1-3t-t^2+2t^3))", gf.rf == expected, gf.rf.to_string()});

        auto classical = generating_function(3, MonoidKind::Classical, max_strands);
        RationalFunction expected_classical(Polynomial{1}, Polynomial{1, -1} * Polynomial{1, -1, -1});
        rep.checks.push_back(
            {"classical n=3: f = 1/((1-t)(1-t-t^2))", classical.rf == expected_classical, classical.rf.to_string()});

        const Automaton a(3, MonoidKind::Singular, max_strands);
        const std::map<int, std::vector<int>> table = {
            {2, {2, 5, 7, 8}}, {3, {3, 4, 7, 8}}, {4, {2, 5, 7, 8}},
            {5, {3, 4, 7, 8}}, {7, {3, 7, 8}},    {8, {2, 7, 8}},
        };
        std::string mismatch;
        for (const auto& [id, expected] : table)
            if (a.pred(id) != expected) mismatch += "row " + std::to_string(id) + " ";
        rep.checks.push_back({"singular n=3: predecessor table", mismatch.empty(), mismatch});

        const auto b = series_expand(gf.rf, 5);
        const std::vector<mpq_class> expected_b = {1, 4, 14, 45, 142, 444};
        rep.checks.push_back({"singular n=3: b_0..b_5 = 1,4,14,45,142,444", b == expected_b, ""});
    }
    return rep;
}

}  // namespace sbgrowth
