#include "sbgrowth/automaton.hpp"

#include <algorithm>
#include <string>

#include "sbgrowth/error.hpp"

namespace sbgrowth {

namespace {

void check_strands(int n, int max_strands) {
    if (n < 2 || n > max_strands) {
        throw Error(ErrorCode::InvalidStrandCount,
                    "strand count " + std::to_string(n) + " outside [2, " + std::to_string(max_strands) + "]");
    }
}

int factorial(int n) {
    int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// The right divisors that let a simple slide past x_k: sigma_k,
/// sigma_k sigma_{k-1}, sigma_k sigma_{k+1}, and every sigma_j with |j-k| > 1.
std::vector<Word> blocking_suffixes(int n, int k) {
    std::vector<Word> out;
    out.emplace_back(n, std::vector<Generator>{sigma(k)});
    if (k - 1 >= 1) out.emplace_back(n, std::vector<Generator>{sigma(k), sigma(k - 1)});
    if (k + 1 <= n - 1) out.emplace_back(n, std::vector<Generator>{sigma(k), sigma(k + 1)});
    for (int j = 1; j <= n - 1; ++j)
        if (std::abs(j - k) > 1) out.emplace_back(n, std::vector<Generator>{sigma(j)});
    return out;
}

}  // namespace

Word Syllable::word() const {
    if (kind == SyllableKind::X) return Word(simple.strands(), {xgen(x_index)});
    return simple_to_word(simple);
}

std::vector<SimpleElement> simples_list(int n, int max_strands) {
    check_strands(n, max_strands);
    std::vector<int> perm = SimpleElement::identity(n).perm();
    std::vector<std::pair<Word, SimpleElement>> keyed;
    do {
        SimpleElement s(perm);
        keyed.emplace_back(simple_to_word(s), s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.length() != b.first.length()) return a.first.length() < b.first.length();
        return a.first < b.first;
    });
    std::vector<SimpleElement> out;
    out.reserve(keyed.size());
    for (auto& [w, s] : keyed) out.push_back(std::move(s));
    return out;
}

EpsilonMatrix::EpsilonMatrix(std::vector<int> ids, std::vector<std::vector<bool>> entries)
    : ids_(std::move(ids)), entries_(std::move(entries)) {}

std::size_t EpsilonMatrix::index_of(int id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        throw Error(ErrorCode::InvalidArgument, "no syllable with id " + std::to_string(id));
    return static_cast<std::size_t>(it - ids_.begin());
}

bool EpsilonMatrix::operator()(int row_id, int col_id) const {
    return entries_[index_of(row_id)][index_of(col_id)];
}

std::vector<Syllable> alphabet(int n, MonoidKind kind, int max_strands) {
    auto simples = simples_list(n, max_strands);
    std::vector<Syllable> out;
    for (std::size_t i = 1; i < simples.size(); ++i) {
        Syllable s;
        s.id = static_cast<int>(i) + 1;
        s.kind = SyllableKind::Simple;
        s.simple = simples[i];
        s.length = simples[i].length();
        out.push_back(std::move(s));
    }
    if (kind == MonoidKind::Singular) {
        const int base = static_cast<int>(simples.size());
        for (int k = 1; k <= n - 1; ++k) {
            Syllable s;
            s.id = base + k;
            s.kind = SyllableKind::X;
            s.simple = SimpleElement::identity(n);
            s.x_index = k;
            s.length = 1;
            out.push_back(std::move(s));
        }
    }
    return out;
}

Automaton::Automaton(int n, MonoidKind kind, int max_strands)
    : n_(n), kind_(kind), delta_id_(0), syllables_(alphabet(n, kind, max_strands)) {
    delta_id_ = factorial(n);
    for (std::size_t i = 0; i < syllables_.size(); ++i) index_[syllables_[i].id] = i;
    pred_.reserve(syllables_.size());
    for (const auto& s : syllables_) pred_.push_back(compute_pred(s));
}

const Syllable& Automaton::syllable(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "no syllable with id " + std::to_string(id));
    return syllables_[it->second];
}

const std::vector<int>& Automaton::pred(int id) const {
    syllable(id);
    return pred_[index_.at(id)];
}

std::vector<int> Automaton::compute_pred(const Syllable& s) const {
    std::vector<int> out;
    if (s.kind == SyllableKind::Simple && s.id == delta_id_) {
        for (const auto& t : syllables_) out.push_back(t.id);
        return out;
    }
    if (s.kind == SyllableKind::Simple) {
        for (const auto& t : syllables_) {
            if (t.kind == SyllableKind::X) {
                out.push_back(t.id);
                continue;
            }
            bool greedy = true;
            for (int a = 1; a <= n_ - 1 && greedy; ++a)
                if (gen_right_divides(a, t.simple) && gen_left_extends_simple(a, s.simple)) greedy = false;
            if (greedy) out.push_back(t.id);
        }
        return out;
    }
    const auto blockers = blocking_suffixes(n_, s.x_index);
    for (const auto& t : syllables_) {
        if (t.kind == SyllableKind::X) {
            out.push_back(t.id);
            continue;
        }
        bool blocked = std::any_of(blockers.begin(), blockers.end(),
                                   [&](const Word& w) { return word_right_divides(w, t.simple); });
        if (!blocked) out.push_back(t.id);
    }
    return out;
}

EpsilonMatrix Automaton::epsilon() const {
    std::vector<int> ids;
    for (const auto& s : syllables_) ids.push_back(s.id);
    std::vector<std::vector<bool>> entries(ids.size(), std::vector<bool>(ids.size(), false));
    for (std::size_t i = 0; i < syllables_.size(); ++i)
        for (int j : pred_[i]) entries[i][index_.at(j)] = true;
    return EpsilonMatrix(std::move(ids), std::move(entries));
}

int Automaton::flip_id(int id) const {
    const Syllable& s = syllable(id);
    if (s.kind == SyllableKind::X) return delta_id_ + (n_ - s.x_index);
    const SimpleElement image = s.simple.flipped();
    for (const auto& t : syllables_)
        if (t.kind == SyllableKind::Simple && t.simple == image) return t.id;
    throw Error(ErrorCode::InvalidArgument, "flip image not in the alphabet");
}

LengthCensus Automaton::count(int kmax) const {
    if (kmax < 0) throw Error(ErrorCode::InvalidArgument, "kmax must be non-negative");
    const std::size_t m = syllables_.size();
    const auto K = static_cast<std::size_t>(kmax);
    // ending[j][k]: normal forms of length k whose rightmost syllable is j.
    std::vector<std::vector<mpz_class>> ending(m, std::vector<mpz_class>(K + 1));
    std::vector<std::vector<std::size_t>> pred_index(m);
    for (std::size_t j = 0; j < m; ++j)
        for (int id : pred_[j]) pred_index[j].push_back(index_.at(id));

    LengthCensus census{n_, kind_, std::vector<mpz_class>(K + 1)};
    census.counts[0] = 1;
    for (std::size_t k = 1; k <= K; ++k) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto len = static_cast<std::size_t>(syllables_[j].length);
            if (len > k) continue;
            mpz_class& cell = ending[j][k];
            if (len == k) cell += 1;
            else
                for (std::size_t p : pred_index[j]) cell += ending[p][k - len];
            census.counts[k] += cell;
        }
    }
    return census;
}

std::vector<int> pred_set(const Syllable& s, int n, MonoidKind kind) {
    return Automaton(n, kind, std::max(n, kDefaultMaxStrands)).pred(s.id);
}

EpsilonMatrix epsilon_matrix(int n, MonoidKind kind) { return Automaton(n, kind).epsilon(); }

LengthCensus count_via_dp(int n, int kmax, MonoidKind kind, int max_strands) {
    return Automaton(n, kind, max_strands).count(kmax);
}

}  // namespace sbgrowth
