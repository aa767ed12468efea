// sbgrowth: growth series of positive classical and singular braid monoids.

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sbgrowth/sbgrowth.h"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct Failure {
    int exit_code;
    std::string message;
};

void check(sbg_status status) {
    if (status == SBG_OK) return;
    int code = kExitInternal;
    if (status == SBG_ERR_INVALID_ARGUMENT || status == SBG_ERR_INVALID_STRANDS) code = kExitUsage;
    if (status == SBG_ERR_RESOURCE_LIMIT) code = kExitResource;
    throw Failure{code, std::string(sbg_status_name(status)) + ": " + sbg_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const { Destroy(p); }
};
using Series = std::unique_ptr<sbg_series, Deleter<sbg_series, sbg_series_destroy>>;
using Genfunc = std::unique_ptr<sbg_genfunc, Deleter<sbg_genfunc, sbg_genfunc_destroy>>;
using Growth = std::unique_ptr<sbg_growth, Deleter<sbg_growth, sbg_growth_destroy>>;
using AutomatonPtr = std::unique_ptr<sbg_automaton, Deleter<sbg_automaton, sbg_automaton_destroy>>;
using Classes = std::unique_ptr<sbg_classes, Deleter<sbg_classes, sbg_classes_destroy>>;
using Report = std::unique_ptr<sbg_report, Deleter<sbg_report, sbg_report_destroy>>;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
ordered_json integer(const std::string& text) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(text.c_str(), &end, 10);
    if (errno == 0 && end && *end == '\0') return v;
    return text;
}

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

struct Common {
    int n = 3;
    std::string kind = "singular";
    std::string format = "text";
    int max_n = 5;
    sbg_options options{0, 0};

    sbg_kind kind_value() const { return kind == "classical" ? SBG_CLASSICAL : SBG_SINGULAR; }

    void validate() {
        if (n < 2 || n > max_n)
            throw Failure{kExitUsage, "--n must lie in [2, " + std::to_string(max_n) + "], got " + std::to_string(n)};
        options.max_strands = max_n;
    }

    ordered_json header(const char* command) const {
        ordered_json doc;
        doc["command"] = command;
        doc["n"] = n;
        doc["kind"] = kind;
        return doc;
    }
};

std::vector<std::string> terms_of(const sbg_series* s) {
    std::vector<std::string> out;
    for (size_t k = 0; k < sbg_series_size(s); ++k) out.emplace_back(sbg_series_term(s, k));
    return out;
}

void run_series(const Common& c, int terms, const std::string& method) {
    sbg_method m = SBG_METHOD_GENFUNC;
    if (method == "dp") m = SBG_METHOD_DP;
    if (method == "oracle") m = SBG_METHOD_ORACLE;
    sbg_series* raw = nullptr;
    check(sbg_series_compute(c.n, c.kind_value(), m, terms, &c.options, &raw));
    Series s(raw);
    const auto b = terms_of(s.get());
    if (c.format == "json") {
        ordered_json doc = c.header("series");
        doc["method"] = method;
        doc["terms"] = ordered_json::array();
        for (const auto& v : b) doc["terms"].push_back(integer(v));
        std::cout << doc.dump() << "\n";
    } else if (c.format == "csv") {
        std::cout << "k,b_k\n";
        for (std::size_t k = 0; k < b.size(); ++k) std::cout << k << "," << b[k] << "\n";
    } else {
        std::cout << join(b) << "\n";
    }
}

void run_genfunc(const Common& c) {
    sbg_genfunc* raw = nullptr;
    check(sbg_genfunc_compute(c.n, c.kind_value(), &c.options, &raw));
    Genfunc gf(raw);
    std::vector<std::string> num, den;
    for (size_t i = 0; i < sbg_genfunc_numerator_size(gf.get()); ++i)
        num.emplace_back(sbg_genfunc_numerator_coeff(gf.get(), i));
    for (size_t i = 0; i < sbg_genfunc_denominator_size(gf.get()); ++i)
        den.emplace_back(sbg_genfunc_denominator_coeff(gf.get(), i));

    if (c.format == "json") {
        ordered_json doc = c.header("genfunc");
        doc["numerator"] = ordered_json::array();
        for (const auto& v : num) doc["numerator"].push_back(integer(v));
        doc["denominator"] = ordered_json::array();
        for (const auto& v : den) doc["denominator"].push_back(integer(v));
        std::cout << doc.dump() << "\n";
    } else if (c.format == "csv") {
        std::cout << "part,degree,coefficient\n";
        for (std::size_t i = 0; i < num.size(); ++i) std::cout << "numerator," << i << "," << num[i] << "\n";
        for (std::size_t i = 0; i < den.size(); ++i) std::cout << "denominator," << i << "," << den[i] << "\n";
    } else {
        std::cout << "f(t) = " << sbg_genfunc_string(gf.get()) << "\n";
        std::cout << "numerator: [" << join(num) << "]\n";
        std::cout << "denominator: [" << join(den) << "]\n";
    }
}

void run_growth(const Common& c, double tol) {
    sbg_genfunc* graw = nullptr;
    check(sbg_genfunc_compute(c.n, c.kind_value(), &c.options, &graw));
    Genfunc gf(graw);
    sbg_growth* raw = nullptr;
    check(sbg_growth_compute(gf.get(), tol, &raw));
    Growth g(raw);
    const sbg_growth* r = g.get();

    std::vector<std::string> rec;
    for (size_t j = 0; j < sbg_growth_recurrence_size(r); ++j) rec.emplace_back(sbg_growth_recurrence_coeff(r, j));

    if (c.format == "json") {
        ordered_json doc = c.header("growth");
        doc["generating_function"] = sbg_genfunc_string(gf.get());
        doc["roots"] = ordered_json::array();
        for (size_t i = 0; i < sbg_growth_root_count(r); ++i)
            doc["roots"].push_back({{"value", sbg_growth_root_value(r, i)},
                                    {"digits", sbg_growth_root_string(r, i)},
                                    {"multiplicity", sbg_growth_root_multiplicity(r, i)}});
        if (sbg_growth_has_residues(r)) {
            doc["residues"] = ordered_json::array();
            for (size_t i = 0; i < sbg_growth_residue_count(r); ++i)
                doc["residues"].push_back({{"pole", sbg_growth_residue_pole(r, i)},
                                           {"coefficient", sbg_growth_residue_coefficient(r, i)}});
        } else {
            doc["residues"] = nullptr;
            doc["residue_note"] = sbg_growth_residue_note(r);
        }
        doc["growth_rate"] = sbg_growth_rate(r);
        doc["growth_rate_digits"] = sbg_growth_rate_string(r);
        doc["recurrence"] = {{"coefficients", rec}, {"valid_from", sbg_growth_recurrence_valid_from(r)}};
        if (sbg_growth_has_cubic(r))
            doc["cubic"] = {{"p", sbg_growth_cubic_p(r)},
                            {"q", sbg_growth_cubic_q(r)},
                            {"discriminant", sbg_growth_cubic_discriminant(r)},
                            {"real_roots", sbg_growth_cubic_root_count(r)}};
        std::cout << doc.dump(2) << "\n";
        return;
    }
    if (c.format == "csv") {
        std::cout << "root,multiplicity,residue\n";
        for (size_t i = 0; i < sbg_growth_root_count(r); ++i) {
            std::cout << sbg_growth_root_string(r, i) << "," << sbg_growth_root_multiplicity(r, i) << ",";
            if (sbg_growth_has_residues(r)) std::cout << sbg_growth_residue_coefficient(r, i);
            std::cout << "\n";
        }
        return;
    }
    std::cout << "f(t) = " << sbg_genfunc_string(gf.get()) << "\n";
    std::cout << "real roots of the denominator:\n";
    for (size_t i = 0; i < sbg_growth_root_count(r); ++i) {
        std::cout << "  r = " << sbg_growth_root_string(r, i);
        if (sbg_growth_root_multiplicity(r, i) > 1) std::cout << "  (multiplicity " << sbg_growth_root_multiplicity(r, i) << ")";
        std::cout << "\n";
    }
    if (sbg_growth_has_residues(r)) {
        std::cout << "partial fractions a / (r - t):\n";
        std::ostringstream line;
        line.precision(12);
        for (size_t i = 0; i < sbg_growth_residue_count(r); ++i)
            line << "  r = " << sbg_growth_residue_pole(r, i) << "  a = " << sbg_growth_residue_coefficient(r, i)
                 << "\n";
        std::cout << line.str();
    } else {
        std::cout << "partial fractions: " << sbg_growth_residue_note(r) << "\n";
    }
    std::cout << "growth rate: " << sbg_growth_rate_string(r) << "\n";
    std::cout << "recurrence (k >= " << sbg_growth_recurrence_valid_from(r) << "): b_k =";
    for (std::size_t j = 0; j < rec.size(); ++j) std::cout << " + (" << rec[j] << ") b_{k-" << j + 1 << "}";
    std::cout << "\n";
    if (sbg_growth_has_cubic(r)) {
        std::cout << "cubic factor: p = " << sbg_growth_cubic_p(r) << ", q = " << sbg_growth_cubic_q(r)
                  << ", q^2/4 + p^3/27 = " << sbg_growth_cubic_discriminant(r) << ", "
                  << sbg_growth_cubic_root_count(r) << " real roots\n";
    }
}

void run_predecessors(const Common& c) {
    sbg_automaton* raw = nullptr;
    check(sbg_automaton_create(c.n, c.kind_value(), &c.options, &raw));
    AutomatonPtr a(raw);
    struct Row {
        int id;
        std::string word;
        int length;
        std::vector<int> pred;
    };
    std::vector<Row> rows;
    for (size_t i = 0; i < sbg_automaton_syllable_count(a.get()); ++i) {
        Row row{sbg_automaton_syllable_id(a.get(), i), sbg_automaton_syllable_word(a.get(), i),
                sbg_automaton_syllable_length(a.get(), i), {}};
        for (size_t j = 0; j < sbg_automaton_pred_count(a.get(), i); ++j)
            row.pred.push_back(sbg_automaton_pred_id(a.get(), i, j));
        rows.push_back(std::move(row));
    }
    auto pred_text = [](const std::vector<int>& p, const char* sep) {
        std::vector<std::string> s;
        for (int v : p) s.push_back(std::to_string(v));
        return join(s, sep);
    };
    if (c.format == "json") {
        ordered_json doc = c.header("predecessors");
        doc["delta"] = sbg_automaton_delta_id(a.get());
        doc["syllables"] = ordered_json::array();
        for (const auto& r : rows)
            doc["syllables"].push_back({{"id", r.id}, {"word", r.word}, {"length", r.length}, {"pred", r.pred}});
        std::cout << doc.dump() << "\n";
    } else if (c.format == "csv") {
        std::cout << "id,word,length,pred\n";
        for (const auto& r : rows)
            std::cout << r.id << "," << r.word << "," << r.length << "," << pred_text(r.pred, " ") << "\n";
    } else {
        std::cout << "id\tword\tlength\tPred\n";
        for (const auto& r : rows)
            std::cout << r.id << "\t" << r.word << "\t" << r.length << "\t{" << pred_text(r.pred, ", ") << "}\n";
    }
}

void run_oracle(const Common& c, int maxlen, int list_length) {
    sbg_series* raw = nullptr;
    check(sbg_series_compute(c.n, c.kind_value(), SBG_METHOD_ORACLE, maxlen, &c.options, &raw));
    Series s(raw);
    const auto counts = terms_of(s.get());
    std::vector<std::string> reps;
    if (list_length >= 0) {
        sbg_classes* craw = nullptr;
        check(sbg_oracle_classes(c.n, c.kind_value(), list_length, &c.options, &craw));
        Classes cl(craw);
        for (size_t i = 0; i < sbg_classes_size(cl.get()); ++i) reps.emplace_back(sbg_classes_word(cl.get(), i));
    }
    if (c.format == "json") {
        ordered_json doc = c.header("oracle");
        doc["counts"] = ordered_json::array();
        for (const auto& v : counts) doc["counts"].push_back(integer(v));
        if (list_length >= 0) {
            doc["list_length"] = list_length;
            doc["representatives"] = reps;
        }
        std::cout << doc.dump() << "\n";
    } else if (c.format == "csv") {
        std::cout << "k,b_k\n";
        for (std::size_t k = 0; k < counts.size(); ++k) std::cout << k << "," << counts[k] << "\n";
        if (list_length >= 0) {
            std::cout << "\nlength,representative\n";
            for (const auto& w : reps) std::cout << list_length << "," << w << "\n";
        }
    } else {
        std::cout << join(counts) << "\n";
        if (list_length >= 0) {
            std::cout << reps.size() << " classes at length " << list_length << ":\n";
            for (const auto& w : reps) std::cout << "  " << w << "\n";
        }
    }
}

int run_verify(const Common& c, int maxlen) {
    sbg_report* raw = nullptr;
    check(sbg_verify(c.n, maxlen, &c.options, &raw));
    Report r(raw);
    const bool ok = sbg_report_passed(r.get()) != 0;
    if (c.format == "json") {
        ordered_json doc = c.header("verify");
        doc["maxlen"] = maxlen;
        doc["passed"] = ok;
        doc["checks"] = ordered_json::array();
        for (size_t i = 0; i < sbg_report_check_count(r.get()); ++i)
            doc["checks"].push_back({{"name", sbg_report_check_name(r.get(), i)},
                                     {"passed", sbg_report_check_passed(r.get(), i) != 0},
                                     {"detail", sbg_report_check_detail(r.get(), i)}});
        std::cout << doc.dump(2) << "\n";
    } else {
        if (c.format == "csv") std::cout << "check,passed\n";
        for (size_t i = 0; i < sbg_report_check_count(r.get()); ++i) {
            const bool pass = sbg_report_check_passed(r.get(), i) != 0;
            if (c.format == "csv") {
                std::cout << "\"" << sbg_report_check_name(r.get(), i) << "\"," << (pass ? 1 : 0) << "\n";
                continue;
            }
            std::cout << (pass ? "PASS  " : "FAIL  ") << sbg_report_check_name(r.get(), i) << "\n";
            const std::string detail = sbg_report_check_detail(r.get(), i);
            if (!pass && !detail.empty()) std::cout << "      " << detail << "\n";
        }
        if (c.format != "csv") std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    if (!ok) std::cerr << "sbgrowth: verification mismatch for n=" << c.n << "\n";
    return ok ? kExitOk : kExitMismatch;
}

std::uint64_t budget_from_env() {
    const char* text = std::getenv("SBGROWTH_WORD_BUDGET");
    if (!text || !*text) return 0;
    char* end = nullptr;
    errno = 0;
    unsigned long long v = std::strtoull(text, &end, 10);
    if (errno != 0 || *end != '\0' || v == 0)
        throw Failure{kExitUsage, std::string("SBGROWTH_WORD_BUDGET must be a positive integer, got '") + text + "'"};
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Growth series of positive classical and singular braid monoids"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sbg_version());

    Common common;
    std::uint64_t budget_flag = 0;
    auto add_common = [&](CLI::App* sub, bool with_kind) {
        sub->add_option("--n", common.n, "Number of strands")->required();
        if (with_kind)
            sub->add_option("--kind", common.kind, "Monoid kind")
                ->check(CLI::IsMember({"singular", "classical"}))
                ->capture_default_str();
        sub->add_option("--format", common.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--max-n", common.max_n, "Largest strand count accepted")
            ->check(CLI::Range(2, 8))
            ->capture_default_str();
        sub->add_option("--word-budget", budget_flag,
                        "Oracle word budget per length (overrides SBGROWTH_WORD_BUDGET)")
            ->check(CLI::PositiveNumber);
    };

    int terms = 10;
    std::string method = "genfunc";
    auto* series = app.add_subcommand("series", "Coefficients b_0..b_K of the growth series");
    add_common(series, true);
    series->add_option("--terms", terms, "Largest K")->required()->check(CLI::NonNegativeNumber);
    series->add_option("--method", method, "Counting method")
        ->check(CLI::IsMember({"genfunc", "dp", "oracle"}))
        ->capture_default_str();

    auto* genfunc = app.add_subcommand("genfunc", "Rational generating function");
    add_common(genfunc, true);

    double tol = 1e-12;
    auto* growth = app.add_subcommand("growth", "Roots, partial fractions, growth rate and recurrence");
    add_common(growth, true);
    growth->add_option("--tol", tol, "Root isolation tolerance")->check(CLI::PositiveNumber)->capture_default_str();

    auto* preds = app.add_subcommand("predecessors", "Syllables and their predecessor sets");
    add_common(preds, true);

    int maxlen = 6;
    int list_length = -1;
    auto* oracle = app.add_subcommand("oracle", "Brute-force class counts");
    add_common(oracle, true);
    oracle->add_option("--maxlen", maxlen, "Largest word length")->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("--list-length", list_length, "Print canonical representatives at this length")
        ->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Agreement of generating function, automaton and oracle");
    add_common(verify, false);
    verify->add_option("--maxlen", maxlen, "Largest word length")->required()->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        common.validate();
        common.options.word_budget = budget_flag ? budget_flag : budget_from_env();
        if (series->parsed()) run_series(common, terms, method);
        else if (genfunc->parsed()) run_genfunc(common);
        else if (growth->parsed()) run_growth(common, tol);
        else if (preds->parsed()) run_predecessors(common);
        else if (oracle->parsed()) run_oracle(common, maxlen, list_length);
        else if (verify->parsed()) return run_verify(common, maxlen);
    } catch (const Failure& f) {
        std::cerr << "sbgrowth: " << f.message << "\n";
        return f.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "sbgrowth: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
