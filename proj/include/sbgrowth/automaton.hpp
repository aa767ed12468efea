#pragma once

// Normal-form automaton: the divisors of the fundamental braid ordered by
// (length, canonical word), the singular generators appended after them, the
// predecessor relation of the right greedy form, and path counting.

#include <map>
#include <vector>

#include "sbgrowth/census.hpp"
#include "sbgrowth/words.hpp"

namespace sbgrowth {

inline constexpr int kDefaultMaxStrands = 5;

enum class SyllableKind { Simple, X };

struct Syllable {
    /// Index 2..n! for non-trivial simples (n! is the fundamental
    /// braid), n!+k for x_k.
    int id = 0;
    SyllableKind kind = SyllableKind::Simple;
    SimpleElement simple;  // meaningful for Simple
    int x_index = 0;       // meaningful for X
    int length = 0;

    Word word() const;
};

/// g_1..g_{n!}: g_1 is the identity, g_{n!} the fundamental braid.
std::vector<SimpleElement> simples_list(int n, int max_strands = kDefaultMaxStrands);

/// Predecessor incidence; entry(i, j) is true iff g_j may stand immediately
/// left of g_i.
class EpsilonMatrix {
public:
    EpsilonMatrix(std::vector<int> ids, std::vector<std::vector<bool>> entries);

    const std::vector<int>& ids() const { return ids_; }
    bool operator()(int row_id, int col_id) const;

private:
    std::size_t index_of(int id) const;
    std::vector<int> ids_;
    std::vector<std::vector<bool>> entries_;
};

class Automaton {
public:
    Automaton(int n, MonoidKind kind, int max_strands = kDefaultMaxStrands);

    int strands() const { return n_; }
    MonoidKind kind() const { return kind_; }
    /// n!, the id of the fundamental braid.
    int delta_id() const { return delta_id_; }
    int delta_length() const { return n_ * (n_ - 1) / 2; }

    const std::vector<Syllable>& syllables() const { return syllables_; }
    const Syllable& syllable(int id) const;
    /// Sorted predecessor ids of syllable id.
    const std::vector<int>& pred(int id) const;
    EpsilonMatrix epsilon() const;
    /// Id of the image under sigma_i -> sigma_{n-i}, x_i -> x_{n-i}.
    int flip_id(int id) const;

    LengthCensus count(int kmax) const;

private:
    std::vector<int> compute_pred(const Syllable& s) const;

    int n_;
    MonoidKind kind_;
    int delta_id_;
    std::vector<Syllable> syllables_;
    std::map<int, std::size_t> index_;
    std::vector<std::vector<int>> pred_;
};

/// Syllables g_2..g_{n!}, then x_1..x_{n-1} for the singular monoid.
std::vector<Syllable> alphabet(int n, MonoidKind kind = MonoidKind::Singular,
                               int max_strands = kDefaultMaxStrands);

std::vector<int> pred_set(const Syllable& s, int n, MonoidKind kind = MonoidKind::Singular);

EpsilonMatrix epsilon_matrix(int n, MonoidKind kind = MonoidKind::Singular);

LengthCensus count_via_dp(int n, int kmax, MonoidKind kind = MonoidKind::Singular,
                          int max_strands = kDefaultMaxStrands);

}  // namespace sbgrowth
