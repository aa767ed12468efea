#pragma once

// Positive classical and singular braid monoids: generators, words,
// presentations, one-step rewriting, and permutation braids.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sbgrowth {

enum class GenKind : std::uint8_t { Sigma, X };

enum class MonoidKind { Classical, Singular };

std::string_view to_string(MonoidKind kind);
MonoidKind parse_kind(std::string_view text);

/// sigma_i or x_i, 1-based index.
struct Generator {
    GenKind kind = GenKind::Sigma;
    int index = 1;

    /// Position in the total order s1 < s2 < ... < s_{n-1} < x1 < ... < x_{n-1}.
    int rank(int n) const { return kind == GenKind::Sigma ? index - 1 : n - 2 + index; }
    static Generator from_rank(int n, int rank);

    friend bool operator==(const Generator&, const Generator&) = default;
};

inline Generator sigma(int i) { return {GenKind::Sigma, i}; }
inline Generator xgen(int i) { return {GenKind::X, i}; }

/// A word over the generators of the monoid on n strands.
class Word {
public:
    Word() = default;
    Word(int n, std::vector<Generator> letters);

    int strands() const { return n_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Generator>& letters() const { return letters_; }
    const Generator& operator[](std::size_t i) const { return letters_[i]; }

    std::vector<int> ranks() const;
    static Word from_ranks(int n, std::span<const int> ranks);

    /// "s1s2x1"; the empty word renders as "e".
    std::string to_string() const;
    /// Accepts "s1s2x1", "s1 s2 x1", "σ1σ2x1", "e" or "".
    static Word parse(int n, std::string_view text);

    Word concat(const Word& other) const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.n_ == b.n_ && a.letters_ == b.letters_;
    }
    /// Lexicographic in the generator order; words of different length compare
    /// as sequences.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    int n_ = 2;
    std::vector<Generator> letters_;
};

struct Relation {
    Word lhs;
    Word rhs;
};

class Presentation {
public:
    int strands() const { return n_; }
    MonoidKind kind() const { return kind_; }
    const std::vector<Relation>& relations() const { return relations_; }
    /// Alphabet size: n-1 classical, 2(n-1) singular.
    int alphabet_size() const { return kind_ == MonoidKind::Singular ? 2 * (n_ - 1) : n_ - 1; }
    bool admits(const Word& w) const;

private:
    friend Presentation build_presentation(int n, MonoidKind kind);
    int n_ = 2;
    MonoidKind kind_ = MonoidKind::Singular;
    std::vector<Relation> relations_;
};

/// Every instance of the positive relation families for n strands. Classical
/// keeps the far commutations of sigmas and the braid relations.
Presentation build_presentation(int n, MonoidKind kind);

/// All words one relation application away from w, in either direction,
/// sorted and without duplicates.
std::vector<Word> rewrite_neighbors(const Word& w, const Presentation& p);

Word flip(const Word& w);

int inversions(std::span<const int> perm);

/// Permutation braid. The permutation is stored as the strand label found at
/// each position (0-based); the letter sigma_k swaps positions k-1 and k, and
/// a word acts left factor first.
class SimpleElement {
public:
    SimpleElement() = default;
    explicit SimpleElement(std::vector<int> perm);

    static SimpleElement identity(int n);
    /// Throws if the word is not a reduced positive sigma-word.
    static SimpleElement from_word(const Word& w);

    int strands() const { return static_cast<int>(perm_.size()); }
    int length() const { return inv_count_; }
    const std::vector<int>& perm() const { return perm_; }

    /// Product in word order (this first, then other); not necessarily simple.
    SimpleElement then(const SimpleElement& other) const;
    SimpleElement flipped() const;

    friend bool operator==(const SimpleElement& a, const SimpleElement& b) {
        return a.perm_ == b.perm_;
    }
    friend auto operator<=>(const SimpleElement& a, const SimpleElement& b) {
        return a.perm_ <=> b.perm_;
    }

private:
    std::vector<int> perm_;
    int inv_count_ = 0;
};

/// Lexicographically smallest reduced sigma-word of s.
Word simple_to_word(const SimpleElement& s);

/// s = s' * sigma_k with s' simple.
bool gen_right_divides(int k, const SimpleElement& s);
/// sigma_k * s is simple.
bool gen_left_extends_simple(int k, const SimpleElement& s);
/// s = s' * w for a reduced sigma-word w (checked letter by letter from the right).
bool word_right_divides(const Word& w, const SimpleElement& s);

}  // namespace sbgrowth
