#include "sbgrowth/sbgrowth.h"

#include <new>
#include <string>
#include <vector>

#include "sbgrowth/automaton.hpp"
#include "sbgrowth/error.hpp"
#include "sbgrowth/growth.hpp"
#include "sbgrowth/oracle.hpp"
#include "sbgrowth/verify.hpp"

using namespace sbgrowth;

struct sbg_series {
    std::vector<std::string> terms;
};

struct sbg_genfunc {
    RationalFunction rf;
    std::vector<std::string> num, den;
    std::string text;
    std::vector<int> ids;
    std::vector<std::string> pieces;
};

struct sbg_growth {
    GrowthReport report;
    std::vector<std::string> roots;
    std::string rate;
    std::vector<std::string> recurrence;
    std::string p, q, disc;
};

struct sbg_automaton {
    Automaton automaton;
    std::vector<std::string> words;
};

struct sbg_classes {
    std::vector<std::string> words;
};

struct sbg_report {
    VerifyReport report;
};

namespace {

thread_local std::string last_error;

sbg_status fail(sbg_status status, const std::string& message) {
    last_error = message;
    return status;
}

sbg_status map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidStrandCount: return SBG_ERR_INVALID_STRANDS;
        case ErrorCode::ResourceLimit: return SBG_ERR_RESOURCE_LIMIT;
        case ErrorCode::SingularMatrix: return SBG_ERR_SINGULAR;
        case ErrorCode::InvalidArgument:
        case ErrorCode::DivisionByZero:
        case ErrorCode::PoleAtOrigin:
        case ErrorCode::NotCubic: return SBG_ERR_INVALID_ARGUMENT;
    }
    return SBG_ERR_INTERNAL;
}

template <class F>
sbg_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return SBG_OK;
    } catch (const Error& e) {
        return fail(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(SBG_ERR_RESOURCE_LIMIT, "out of memory");
    } catch (const std::exception& e) {
        return fail(SBG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SBG_ERR_INTERNAL, "unknown failure");
    }
}

MonoidKind to_kind(sbg_kind k) {
    if (k == SBG_SINGULAR) return MonoidKind::Singular;
    if (k == SBG_CLASSICAL) return MonoidKind::Classical;
    throw Error(ErrorCode::InvalidArgument, "unknown monoid kind");
}

OracleOptions oracle_opts(const sbg_options* o) {
    OracleOptions out;
    if (o && o->word_budget) out.word_budget = o->word_budget;
    return out;
}

int max_strands(const sbg_options* o) { return (o && o->max_strands > 0) ? o->max_strands : kDefaultMaxStrands; }

template <class T>
void require(const T* p, const char* what) {
    if (!p) throw Error(ErrorCode::InvalidArgument, std::string("null ") + what);
}

const char* at(const std::vector<std::string>& v, std::size_t i) { return i < v.size() ? v[i].c_str() : nullptr; }

std::string decimal(const mpf_class& v) {
    mp_exp_t exp = 0;
    std::string digits = v.get_str(exp, 10, 40);
    if (digits.empty()) return "0";
    bool neg = digits[0] == '-';
    if (neg) digits.erase(0, 1);
    std::string out;
    if (exp <= 0) out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
    else if (static_cast<std::size_t>(exp) >= digits.size())
        out = digits + std::string(static_cast<std::size_t>(exp) - digits.size(), '0');
    else out = digits.substr(0, exp) + "." + digits.substr(exp);
    return neg ? "-" + out : out;
}

sbg_genfunc* wrap(const RationalFunction& rf) {
    auto* g = new sbg_genfunc{rf, {}, {}, rf.to_string(), {}, {}};
    // Shared scale: num/den of the canonical form are already integral.
    for (const auto& c : rf.num().coeffs()) g->num.push_back(c.get_num().get_str());
    for (const auto& c : rf.den().coeffs()) g->den.push_back(c.get_num().get_str());
    return g;
}

}  // namespace

extern "C" {

const char* sbg_version(void) { return "1.0.0"; }

const char* sbg_last_error(void) { return last_error.c_str(); }

const char* sbg_status_name(sbg_status status) {
    switch (status) {
        case SBG_OK: return "ok";
        case SBG_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SBG_ERR_INVALID_STRANDS: return "invalid strand count";
        case SBG_ERR_RESOURCE_LIMIT: return "resource limit";
        case SBG_ERR_SINGULAR: return "singular system";
        case SBG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

sbg_status sbg_series_compute(int n, sbg_kind kind, sbg_method method, int terms, const sbg_options* options,
                              sbg_series** out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = nullptr;
        if (terms < 0) throw Error(ErrorCode::InvalidArgument, "terms must be non-negative");
        const MonoidKind k = to_kind(kind);
        std::vector<mpz_class> counts;
        switch (method) {
            case SBG_METHOD_GENFUNC:
                for (const auto& c : series_expand(generating_function(n, k, max_strands(options)).rf, terms))
                    counts.push_back(c.get_num());
                break;
            case SBG_METHOD_DP: counts = Automaton(n, k, max_strands(options)).count(terms).counts; break;
            case SBG_METHOD_ORACLE:
                counts = count_by_length(build_presentation(n, k), terms, oracle_opts(options)).counts;
                break;
            default: throw Error(ErrorCode::InvalidArgument, "unknown counting method");
        }
        auto* s = new sbg_series;
        for (const auto& c : counts) s->terms.push_back(c.get_str());
        *out = s;
    });
}

size_t sbg_series_size(const sbg_series* series) { return series ? series->terms.size() : 0; }
const char* sbg_series_term(const sbg_series* series, size_t k) { return series ? at(series->terms, k) : nullptr; }
void sbg_series_destroy(sbg_series* series) { delete series; }

sbg_status sbg_genfunc_compute(int n, sbg_kind kind, const sbg_options* options, sbg_genfunc** out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = nullptr;
        const GeneratingFunction gf = generating_function(n, to_kind(kind), max_strands(options));
        sbg_genfunc* g = wrap(gf.rf);
        for (const auto& [id, rf] : gf.per_syllable) {
            g->ids.push_back(id);
            g->pieces.push_back(rf.to_string());
        }
        *out = g;
    });
}

size_t sbg_genfunc_numerator_size(const sbg_genfunc* gf) { return gf ? gf->num.size() : 0; }
const char* sbg_genfunc_numerator_coeff(const sbg_genfunc* gf, size_t i) { return gf ? at(gf->num, i) : nullptr; }
size_t sbg_genfunc_denominator_size(const sbg_genfunc* gf) { return gf ? gf->den.size() : 0; }
const char* sbg_genfunc_denominator_coeff(const sbg_genfunc* gf, size_t i) { return gf ? at(gf->den, i) : nullptr; }
const char* sbg_genfunc_string(const sbg_genfunc* gf) { return gf ? gf->text.c_str() : nullptr; }
size_t sbg_genfunc_syllable_count(const sbg_genfunc* gf) { return gf ? gf->ids.size() : 0; }
int sbg_genfunc_syllable_id(const sbg_genfunc* gf, size_t i) {
    return gf && i < gf->ids.size() ? gf->ids[i] : -1;
}
const char* sbg_genfunc_syllable_string(const sbg_genfunc* gf, size_t i) {
    return gf ? at(gf->pieces, i) : nullptr;
}

sbg_status sbg_genfunc_from_coefficients(const char* const* numerator, size_t num_size,
                                         const char* const* denominator, size_t den_size, sbg_genfunc** out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = nullptr;
        auto read = [](const char* const* src, size_t size) {
            std::vector<mpz_class> v;
            for (size_t i = 0; i < size; ++i) {
                require(src[i], "coefficient");
                mpz_class c;
                if (c.set_str(src[i], 10) != 0)
                    throw Error(ErrorCode::InvalidArgument, std::string("bad integer '") + src[i] + "'");
                v.push_back(c);
            }
            return Polynomial::from_integers(v);
        };
        if (num_size) require(numerator, "numerator");
        if (den_size) require(denominator, "denominator");
        const Polynomial den = read(denominator, den_size);
        if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
        *out = wrap(RationalFunction(read(numerator, num_size), den));
    });
}

sbg_status sbg_genfunc_expand(const sbg_genfunc* gf, int terms, sbg_series** out) {
    return guarded([&] {
        require(gf, "generating function");
        require(out, "output pointer");
        *out = nullptr;
        if (terms < 0) throw Error(ErrorCode::InvalidArgument, "terms must be non-negative");
        auto* s = new sbg_series;
        for (const auto& c : series_expand(gf->rf, terms)) s->terms.push_back(c.get_str());
        *out = s;
    });
}

void sbg_genfunc_destroy(sbg_genfunc* gf) { delete gf; }

sbg_status sbg_growth_compute(const sbg_genfunc* gf, double tol, sbg_growth** out) {
    return guarded([&] {
        require(gf, "generating function");
        require(out, "output pointer");
        *out = nullptr;
        auto* g = new sbg_growth{growth_report(gf->rf, tol), {}, {}, {}, {}, {}, {}};
        for (const auto& r : g->report.real_roots) g->roots.push_back(decimal(r.value));
        g->rate = decimal(g->report.growth_rate);
        for (const auto& c : g->report.recurrence.coefficients) g->recurrence.push_back(c.get_str());
        if (g->report.cubic) {
            g->p = g->report.cubic->p.get_str();
            g->q = g->report.cubic->q.get_str();
            g->disc = g->report.cubic->discriminant_expr.get_str();
        }
        *out = g;
    });
}

size_t sbg_growth_root_count(const sbg_growth* g) { return g ? g->report.real_roots.size() : 0; }
double sbg_growth_root_value(const sbg_growth* g, size_t i) {
    return g && i < g->report.real_roots.size() ? g->report.real_roots[i].approx() : 0.0;
}
const char* sbg_growth_root_string(const sbg_growth* g, size_t i) { return g ? at(g->roots, i) : nullptr; }
int sbg_growth_root_multiplicity(const sbg_growth* g, size_t i) {
    return g && i < g->report.real_roots.size() ? g->report.real_roots[i].multiplicity : 0;
}
int sbg_growth_has_residues(const sbg_growth* g) { return g && g->report.has_residues ? 1 : 0; }
const char* sbg_growth_residue_note(const sbg_growth* g) { return g ? g->report.residue_note.c_str() : nullptr; }
size_t sbg_growth_residue_count(const sbg_growth* g) { return g ? g->report.residues.size() : 0; }
double sbg_growth_residue_pole(const sbg_growth* g, size_t i) {
    return g && i < g->report.residues.size() ? g->report.residues[i].pole.get_d() : 0.0;
}
double sbg_growth_residue_coefficient(const sbg_growth* g, size_t i) {
    return g && i < g->report.residues.size() ? g->report.residues[i].coefficient.get_d() : 0.0;
}
double sbg_growth_rate(const sbg_growth* g) { return g ? g->report.growth_rate.get_d() : 0.0; }
const char* sbg_growth_rate_string(const sbg_growth* g) { return g ? g->rate.c_str() : nullptr; }
size_t sbg_growth_recurrence_size(const sbg_growth* g) { return g ? g->recurrence.size() : 0; }
const char* sbg_growth_recurrence_coeff(const sbg_growth* g, size_t j) { return g ? at(g->recurrence, j) : nullptr; }
int sbg_growth_recurrence_valid_from(const sbg_growth* g) { return g ? g->report.recurrence.valid_from : 0; }
int sbg_growth_has_cubic(const sbg_growth* g) { return g && g->report.cubic ? 1 : 0; }
const char* sbg_growth_cubic_p(const sbg_growth* g) { return g && g->report.cubic ? g->p.c_str() : nullptr; }
const char* sbg_growth_cubic_q(const sbg_growth* g) { return g && g->report.cubic ? g->q.c_str() : nullptr; }
const char* sbg_growth_cubic_discriminant(const sbg_growth* g) {
    return g && g->report.cubic ? g->disc.c_str() : nullptr;
}
int sbg_growth_cubic_root_count(const sbg_growth* g) {
    return g && g->report.cubic ? g->report.cubic->root_count : 0;
}
void sbg_growth_destroy(sbg_growth* g) { delete g; }

sbg_status sbg_automaton_create(int n, sbg_kind kind, const sbg_options* options, sbg_automaton** out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = nullptr;
        auto* a = new sbg_automaton{Automaton(n, to_kind(kind), max_strands(options)), {}};
        for (const auto& s : a->automaton.syllables()) a->words.push_back(s.word().to_string());
        *out = a;
    });
}

int sbg_automaton_delta_id(const sbg_automaton* a) { return a ? a->automaton.delta_id() : -1; }
size_t sbg_automaton_syllable_count(const sbg_automaton* a) { return a ? a->automaton.syllables().size() : 0; }
int sbg_automaton_syllable_id(const sbg_automaton* a, size_t i) {
    return a && i < a->automaton.syllables().size() ? a->automaton.syllables()[i].id : -1;
}
const char* sbg_automaton_syllable_word(const sbg_automaton* a, size_t i) { return a ? at(a->words, i) : nullptr; }
int sbg_automaton_syllable_length(const sbg_automaton* a, size_t i) {
    return a && i < a->automaton.syllables().size() ? a->automaton.syllables()[i].length : -1;
}
size_t sbg_automaton_pred_count(const sbg_automaton* a, size_t i) {
    if (!a || i >= a->automaton.syllables().size()) return 0;
    return a->automaton.pred(a->automaton.syllables()[i].id).size();
}
int sbg_automaton_pred_id(const sbg_automaton* a, size_t i, size_t j) {
    if (!a || i >= a->automaton.syllables().size()) return -1;
    const auto& p = a->automaton.pred(a->automaton.syllables()[i].id);
    return j < p.size() ? p[j] : -1;
}
int sbg_automaton_epsilon(const sbg_automaton* a, int row_id, int col_id) {
    if (!a) return -1;
    try {
        return a->automaton.epsilon()(row_id, col_id) ? 1 : 0;
    } catch (...) {
        return -1;
    }
}
void sbg_automaton_destroy(sbg_automaton* a) { delete a; }

sbg_status sbg_oracle_classes(int n, sbg_kind kind, int length, const sbg_options* options, sbg_classes** out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = nullptr;
        if (length < 0) throw Error(ErrorCode::InvalidArgument, "length must be non-negative");
        auto* c = new sbg_classes;
        for (const auto& w : enumerate_classes(build_presentation(n, to_kind(kind)), length, oracle_opts(options)))
            c->words.push_back(w.to_string());
        *out = c;
    });
}

size_t sbg_classes_size(const sbg_classes* c) { return c ? c->words.size() : 0; }
const char* sbg_classes_word(const sbg_classes* c, size_t i) { return c ? at(c->words, i) : nullptr; }
void sbg_classes_destroy(sbg_classes* c) { delete c; }

sbg_status sbg_oracle_equivalent(int n, sbg_kind kind, const char* w1, const char* w2, const sbg_options* options,
                                 int* result) {
    return guarded([&] {
        require(w1, "word");
        require(w2, "word");
        require(result, "result pointer");
        const Presentation p = build_presentation(n, to_kind(kind));
        *result = are_equivalent(Word::parse(n, w1), Word::parse(n, w2), p, oracle_opts(options)) ? 1 : 0;
    });
}

sbg_status sbg_verify(int n, int maxlen, const sbg_options* options, sbg_report** out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = nullptr;
        *out = new sbg_report{verify(n, maxlen, oracle_opts(options), max_strands(options))};
    });
}

int sbg_report_passed(const sbg_report* r) { return r && r->report.passed() ? 1 : 0; }
size_t sbg_report_check_count(const sbg_report* r) { return r ? r->report.checks.size() : 0; }
const char* sbg_report_check_name(const sbg_report* r, size_t i) {
    return r && i < r->report.checks.size() ? r->report.checks[i].name.c_str() : nullptr;
}
int sbg_report_check_passed(const sbg_report* r, size_t i) {
    return r && i < r->report.checks.size() && r->report.checks[i].passed ? 1 : 0;
}
const char* sbg_report_check_detail(const sbg_report* r, size_t i) {
    return r && i < r->report.checks.size() ? r->report.checks[i].detail.c_str() : nullptr;
}
void sbg_report_destroy(sbg_report* r) { delete r; }

}  // extern "C"
