#include "sbgrowth/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sbgrowth/error.hpp"

namespace sbgrowth {

std::string_view to_string(MonoidKind kind) {
    return kind == MonoidKind::Singular ? "singular" : "classical";
}

MonoidKind parse_kind(std::string_view text) {
    if (text == "singular") return MonoidKind::Singular;
    if (text == "classical") return MonoidKind::Classical;
    throw Error(ErrorCode::InvalidArgument, "unknown monoid kind '" + std::string(text) + "'");
}

Generator Generator::from_rank(int n, int rank) {
    if (rank < n - 1) return sigma(rank + 1);
    return xgen(rank - (n - 1) + 1);
}

Word::Word(int n, std::vector<Generator> letters) : n_(n), letters_(std::move(letters)) {
    if (n < 2) throw Error(ErrorCode::InvalidStrandCount, "strand count must be at least 2");
    for (const auto& g : letters_) {
        if (g.index < 1 || g.index > n - 1) {
            throw Error(ErrorCode::InvalidArgument,
                        "generator index " + std::to_string(g.index) + " out of range for " +
                            std::to_string(n) + " strands");
        }
    }
}

std::vector<int> Word::ranks() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (const auto& g : letters_) out.push_back(g.rank(n_));
    return out;
}

Word Word::from_ranks(int n, std::span<const int> ranks) {
    std::vector<Generator> letters;
    letters.reserve(ranks.size());
    for (int r : ranks) letters.push_back(Generator::from_rank(n, r));
    return Word(n, std::move(letters));
}

std::string Word::to_string() const {
    if (letters_.empty()) return "e";
    std::string out;
    for (const auto& g : letters_) {
        out += g.kind == GenKind::Sigma ? 's' : 'x';
        out += std::to_string(g.index);
    }
    return out;
}

Word Word::parse(int n, std::string_view text) {
    std::vector<Generator> letters;
    std::size_t i = 0;
    auto fail = [&] {
        throw Error(ErrorCode::InvalidArgument, "cannot parse word '" + std::string(text) + "'");
    };
    if (text == "e" || text == "1") return Word(n, {});
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == ',' || c == '*' || c == '.') {
            ++i;
            continue;
        }
        GenKind kind;
        if (c == 's' || c == 'S') {
            kind = GenKind::Sigma;
            ++i;
        } else if (c == 'x' || c == 'X') {
            kind = GenKind::X;
            ++i;
        } else if (static_cast<unsigned char>(c) == 0xCF && i + 1 < text.size() &&
                   static_cast<unsigned char>(text[i + 1]) == 0x83) {
            kind = GenKind::Sigma;  // UTF-8 sigma
            i += 2;
        } else {
            fail();
        }
        if (i < text.size() && text[i] == '_') ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail();
        letters.push_back({kind, std::stoi(std::string(text.substr(start, i - start)))});
    }
    return Word(n, std::move(letters));
}

Word Word::concat(const Word& other) const {
    std::vector<Generator> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(n_, std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
        [n = a.n_](const Generator& x, const Generator& y) { return x.rank(n) <=> y.rank(n); });
}

bool Presentation::admits(const Word& w) const {
    if (w.strands() != n_) return false;
    if (kind_ == MonoidKind::Classical) {
        return std::all_of(w.letters().begin(), w.letters().end(),
                           [](const Generator& g) { return g.kind == GenKind::Sigma; });
    }
    return true;
}

Presentation build_presentation(int n, MonoidKind kind) {
    if (n < 2) throw Error(ErrorCode::InvalidStrandCount, "strand count must be at least 2");
    Presentation p;
    p.n_ = n;
    p.kind_ = kind;
    auto rel = [&](std::vector<Generator> l, std::vector<Generator> r) {
        p.relations_.push_back({Word(n, std::move(l)), Word(n, std::move(r))});
    };
    const int last = n - 1;

    for (int i = 1; i <= last; ++i)
        for (int j = i + 2; j <= last; ++j) rel({sigma(i), sigma(j)}, {sigma(j), sigma(i)});
    for (int i = 1; i + 1 <= last; ++i)
        rel({sigma(i), sigma(i + 1), sigma(i)}, {sigma(i + 1), sigma(i), sigma(i + 1)});
    if (kind == MonoidKind::Classical) return p;

    for (int i = 1; i <= last; ++i)
        for (int j = i + 2; j <= last; ++j) rel({xgen(i), xgen(j)}, {xgen(j), xgen(i)});
    for (int i = 1; i <= last; ++i)
        for (int j = 1; j <= last; ++j)
            if (std::abs(i - j) != 1) rel({xgen(i), sigma(j)}, {sigma(j), xgen(i)});
    for (int i = 1; i + 1 <= last; ++i) {
        rel({sigma(i), sigma(i + 1), xgen(i)}, {xgen(i + 1), sigma(i), sigma(i + 1)});
        rel({sigma(i + 1), sigma(i), xgen(i + 1)}, {xgen(i), sigma(i + 1), sigma(i)});
    }
    return p;
}

std::vector<Word> rewrite_neighbors(const Word& w, const Presentation& p) {
    std::vector<Word> out;
    const auto& letters = w.letters();
    auto try_side = [&](const Word& from, const Word& to) {
        const auto& pat = from.letters();
        if (pat.size() > letters.size()) return;
        for (std::size_t pos = 0; pos + pat.size() <= letters.size(); ++pos) {
            if (!std::equal(pat.begin(), pat.end(), letters.begin() + static_cast<long>(pos)))
                continue;
            std::vector<Generator> next = letters;
            std::copy(to.letters().begin(), to.letters().end(),
                      next.begin() + static_cast<long>(pos));
            out.emplace_back(w.strands(), std::move(next));
        }
    };
    for (const auto& r : p.relations()) {
        try_side(r.lhs, r.rhs);
        try_side(r.rhs, r.lhs);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::erase(out, w);
    return out;
}

Word flip(const Word& w) {
    const int n = w.strands();
    std::vector<Generator> out;
    out.reserve(w.length());
    for (const auto& g : w.letters()) out.push_back({g.kind, n - g.index});
    return Word(n, std::move(out));
}

int inversions(std::span<const int> perm) {
    int count = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++count;
    return count;
}

SimpleElement::SimpleElement(std::vector<int> perm) : perm_(std::move(perm)) {
    std::vector<int> sorted = perm_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i))
            throw Error(ErrorCode::InvalidArgument, "not a permutation of 0..n-1");
    }
    inv_count_ = inversions(perm_);
}

SimpleElement SimpleElement::identity(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    return SimpleElement(std::move(perm));
}

SimpleElement SimpleElement::from_word(const Word& w) {
    std::vector<int> perm = identity(w.strands()).perm_;
    for (const auto& g : w.letters()) {
        if (g.kind != GenKind::Sigma)
            throw Error(ErrorCode::InvalidArgument, "simple elements are sigma-words");
        std::swap(perm[static_cast<std::size_t>(g.index - 1)],
                  perm[static_cast<std::size_t>(g.index)]);
    }
    SimpleElement s(std::move(perm));
    if (s.length() != static_cast<int>(w.length()))
        throw Error(ErrorCode::InvalidArgument, "word " + w.to_string() + " is not reduced");
    return s;
}

SimpleElement SimpleElement::then(const SimpleElement& other) const {
    std::vector<int> out(perm_.size());
    for (std::size_t pos = 0; pos < out.size(); ++pos)
        out[pos] = perm_[static_cast<std::size_t>(other.perm_[pos])];
    return SimpleElement(std::move(out));
}

SimpleElement SimpleElement::flipped() const {
    const int n = strands();
    std::vector<int> out(perm_.size());
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = n - 1 - perm_[static_cast<std::size_t>(n - 1 - i)];
    return SimpleElement(std::move(out));
}

namespace {

std::size_t position_of(const std::vector<int>& perm, int label) {
    return static_cast<std::size_t>(std::find(perm.begin(), perm.end(), label) - perm.begin());
}

}  // namespace

Word simple_to_word(const SimpleElement& s) {
    const int n = s.strands();
    std::vector<int> perm = s.perm();
    std::vector<Generator> letters;
    // Peel off the smallest left divisor sigma_k each round: label k sits
    // left of label k-1 exactly when sigma_k left-divides.
    for (int remaining = s.length(); remaining > 0; --remaining) {
        for (int k = 1; k < n; ++k) {
            std::size_t lo = position_of(perm, k - 1);
            std::size_t hi = position_of(perm, k);
            if (hi < lo) {
                std::swap(perm[lo], perm[hi]);
                letters.push_back(sigma(k));
                break;
            }
        }
    }
    return Word(n, std::move(letters));
}

bool gen_right_divides(int k, const SimpleElement& s) {
    const auto& p = s.perm();
    return p[static_cast<std::size_t>(k - 1)] > p[static_cast<std::size_t>(k)];
}

bool gen_left_extends_simple(int k, const SimpleElement& s) {
    return position_of(s.perm(), k - 1) < position_of(s.perm(), k);
}

bool word_right_divides(const Word& w, const SimpleElement& s) {
    std::vector<int> perm = s.perm();
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (it->kind != GenKind::Sigma) return false;
        auto k = static_cast<std::size_t>(it->index);
        if (perm[k - 1] < perm[k]) return false;
        std::swap(perm[k - 1], perm[k]);
    }
    return true;
}

}  // namespace sbgrowth
