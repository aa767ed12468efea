/*
 * C interface to the sbgrowth engine: growth series of positive classical and
 * singular braid monoids.
 *
 * Every computation returns an sbg_status and hands back an opaque handle
 * that the caller releases with the matching *_destroy function. Strings
 * returned by accessors are owned by the handle and stay valid until it is
 * destroyed. Exact integers (counts, polynomial coefficients) are returned as
 * decimal strings. On failure sbg_last_error() describes the problem; the
 * message is per thread.
 */
#ifndef SBGROWTH_SBGROWTH_H
#define SBGROWTH_SBGROWTH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SBG_API __declspec(dllexport)
#else
#define SBG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sbg_status {
    SBG_OK = 0,
    SBG_ERR_INVALID_ARGUMENT = 1,
    SBG_ERR_INVALID_STRANDS = 2,
    SBG_ERR_RESOURCE_LIMIT = 3,
    SBG_ERR_SINGULAR = 4,
    SBG_ERR_INTERNAL = 5
} sbg_status;

typedef enum sbg_kind { SBG_SINGULAR = 0, SBG_CLASSICAL = 1 } sbg_kind;

typedef enum sbg_method { SBG_METHOD_GENFUNC = 0, SBG_METHOD_DP = 1, SBG_METHOD_ORACLE = 2 } sbg_method;

/* Zero fields select the defaults (word budget 10^8, at most 5 strands). */
typedef struct sbg_options {
    uint64_t word_budget;
    int max_strands;
} sbg_options;

SBG_API const char* sbg_version(void);
SBG_API const char* sbg_last_error(void);
SBG_API const char* sbg_status_name(sbg_status status);

/* ---- series: b_0..b_terms ---- */
typedef struct sbg_series sbg_series;

SBG_API sbg_status sbg_series_compute(int n, sbg_kind kind, sbg_method method, int terms,
                                      const sbg_options* options, sbg_series** out);
SBG_API size_t sbg_series_size(const sbg_series* series);
SBG_API const char* sbg_series_term(const sbg_series* series, size_t k);
SBG_API void sbg_series_destroy(sbg_series* series);

/* ---- generating function f = numerator / denominator ---- */
typedef struct sbg_genfunc sbg_genfunc;

SBG_API sbg_status sbg_genfunc_compute(int n, sbg_kind kind, const sbg_options* options, sbg_genfunc** out);
/* Integer coefficients, ascending degree, canonical scaling. */
SBG_API size_t sbg_genfunc_numerator_size(const sbg_genfunc* gf);
SBG_API const char* sbg_genfunc_numerator_coeff(const sbg_genfunc* gf, size_t i);
SBG_API size_t sbg_genfunc_denominator_size(const sbg_genfunc* gf);
SBG_API const char* sbg_genfunc_denominator_coeff(const sbg_genfunc* gf, size_t i);
/* Human-readable form, e.g. "(1) / (1 - 4t + 2t^2 + 3t^3 - 2t^4)". */
SBG_API const char* sbg_genfunc_string(const sbg_genfunc* gf);
/* The per-syllable pieces f_j, in id order. */
SBG_API size_t sbg_genfunc_syllable_count(const sbg_genfunc* gf);
SBG_API int sbg_genfunc_syllable_id(const sbg_genfunc* gf, size_t i);
SBG_API const char* sbg_genfunc_syllable_string(const sbg_genfunc* gf, size_t i);
/* Builds a generating function from integer coefficient strings (ascending). */
SBG_API sbg_status sbg_genfunc_from_coefficients(const char* const* numerator, size_t num_size,
                                                 const char* const* denominator, size_t den_size,
                                                 sbg_genfunc** out);
/* Taylor coefficients b_0..b_terms as decimal rationals ("3" or "1/2"). */
SBG_API sbg_status sbg_genfunc_expand(const sbg_genfunc* gf, int terms, sbg_series** out);
SBG_API void sbg_genfunc_destroy(sbg_genfunc* gf);

/* ---- growth analysis ---- */
typedef struct sbg_growth sbg_growth;

SBG_API sbg_status sbg_growth_compute(const sbg_genfunc* gf, double tol, sbg_growth** out);
SBG_API size_t sbg_growth_root_count(const sbg_growth* g);
SBG_API double sbg_growth_root_value(const sbg_growth* g, size_t i);
/* Root to roughly 40 significant digits. */
SBG_API const char* sbg_growth_root_string(const sbg_growth* g, size_t i);
SBG_API int sbg_growth_root_multiplicity(const sbg_growth* g, size_t i);
SBG_API int sbg_growth_has_residues(const sbg_growth* g);
SBG_API const char* sbg_growth_residue_note(const sbg_growth* g);
SBG_API size_t sbg_growth_residue_count(const sbg_growth* g);
/* Residue i in the form coefficient / (pole - t). */
SBG_API double sbg_growth_residue_pole(const sbg_growth* g, size_t i);
SBG_API double sbg_growth_residue_coefficient(const sbg_growth* g, size_t i);
SBG_API double sbg_growth_rate(const sbg_growth* g);
SBG_API const char* sbg_growth_rate_string(const sbg_growth* g);
/* b_k = sum_j c_j b_{k-j} for k >= valid_from; c_j as decimal rationals. */
SBG_API size_t sbg_growth_recurrence_size(const sbg_growth* g);
SBG_API const char* sbg_growth_recurrence_coeff(const sbg_growth* g, size_t j);
SBG_API int sbg_growth_recurrence_valid_from(const sbg_growth* g);
/* Depressed-cubic data of the cubic factor, when the denominator is a power of
 * (1 - t) times a cubic. Returns 0 when absent. */
SBG_API int sbg_growth_has_cubic(const sbg_growth* g);
SBG_API const char* sbg_growth_cubic_p(const sbg_growth* g);
SBG_API const char* sbg_growth_cubic_q(const sbg_growth* g);
SBG_API const char* sbg_growth_cubic_discriminant(const sbg_growth* g);
SBG_API int sbg_growth_cubic_root_count(const sbg_growth* g);
SBG_API void sbg_growth_destroy(sbg_growth* g);

/* ---- normal-form automaton ---- */
typedef struct sbg_automaton sbg_automaton;

SBG_API sbg_status sbg_automaton_create(int n, sbg_kind kind, const sbg_options* options, sbg_automaton** out);
SBG_API int sbg_automaton_delta_id(const sbg_automaton* a);
SBG_API size_t sbg_automaton_syllable_count(const sbg_automaton* a);
SBG_API int sbg_automaton_syllable_id(const sbg_automaton* a, size_t i);
SBG_API const char* sbg_automaton_syllable_word(const sbg_automaton* a, size_t i);
SBG_API int sbg_automaton_syllable_length(const sbg_automaton* a, size_t i);
SBG_API size_t sbg_automaton_pred_count(const sbg_automaton* a, size_t i);
SBG_API int sbg_automaton_pred_id(const sbg_automaton* a, size_t i, size_t j);
/* 1 iff syllable col_id may precede syllable row_id; -1 for unknown ids. */
SBG_API int sbg_automaton_epsilon(const sbg_automaton* a, int row_id, int col_id);
SBG_API void sbg_automaton_destroy(sbg_automaton* a);

/* ---- brute-force oracle ---- */
typedef struct sbg_classes sbg_classes;

/* Canonical (lexicographically smallest) class representatives at one length. */
SBG_API sbg_status sbg_oracle_classes(int n, sbg_kind kind, int length, const sbg_options* options,
                                      sbg_classes** out);
SBG_API size_t sbg_classes_size(const sbg_classes* c);
SBG_API const char* sbg_classes_word(const sbg_classes* c, size_t i);
SBG_API void sbg_classes_destroy(sbg_classes* c);
/* Words are written like "s1s2x1"; "e" is the empty word. */
SBG_API sbg_status sbg_oracle_equivalent(int n, sbg_kind kind, const char* w1, const char* w2,
                                         const sbg_options* options, int* result);

/* ---- verification suite ---- */
typedef struct sbg_report sbg_report;

SBG_API sbg_status sbg_verify(int n, int maxlen, const sbg_options* options, sbg_report** out);
SBG_API int sbg_report_passed(const sbg_report* r);
SBG_API size_t sbg_report_check_count(const sbg_report* r);
SBG_API const char* sbg_report_check_name(const sbg_report* r, size_t i);
SBG_API int sbg_report_check_passed(const sbg_report* r, size_t i);
SBG_API const char* sbg_report_check_detail(const sbg_report* r, size_t i);
SBG_API void sbg_report_destroy(sbg_report* r);

#ifdef __cplusplus
}
#endif

#endif /* SBGROWTH_SBGROWTH_H */
