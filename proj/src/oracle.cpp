#include "sbgrowth/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "sbgrowth/error.hpp"

namespace sbgrowth {

namespace {

struct Rule {
    std::vector<int> from;
    std::vector<int> to;
};

/// Words of fixed length k encoded as base-m integers, first letter most
/// significant, so numeric order is lexicographic order.
class LengthSpace {
public:
    LengthSpace(const Presentation& p, int k) : n_(p.strands()), m_(p.alphabet_size()), k_(k) {
        place_.assign(static_cast<std::size_t>(k) + 1, 1);
        for (int i = k - 1; i >= 0; --i)
            place_[static_cast<std::size_t>(i)] =
                place_[static_cast<std::size_t>(i) + 1] * static_cast<std::uint64_t>(m_);
        for (const auto& r : p.relations()) {
            if (static_cast<int>(r.lhs.length()) > k) continue;
            rules_.push_back({r.lhs.ranks(), r.rhs.ranks()});
            rules_.push_back({r.rhs.ranks(), r.lhs.ranks()});
        }
        digits_.resize(static_cast<std::size_t>(k));
    }

    /// m^k, or nullopt-like max() on overflow.
    static std::uint64_t space_size(int m, int k) {
        std::uint64_t size = 1;
        for (int i = 0; i < k; ++i) {
            if (size > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(m))
                return std::numeric_limits<std::uint64_t>::max();
            size *= static_cast<std::uint64_t>(m);
        }
        return size;
    }

    std::uint64_t size() const { return place_[0]; }

    std::uint64_t encode(const Word& w) const {
        std::uint64_t code = 0;
        for (int r : w.ranks()) code = code * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(r);
        return code;
    }

    Word decode(std::uint64_t code) const {
        std::vector<int> ranks(static_cast<std::size_t>(k_));
        for (int i = k_ - 1; i >= 0; --i) {
            ranks[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(m_));
            code /= static_cast<std::uint64_t>(m_);
        }
        return Word::from_ranks(n_, ranks);
    }

    template <typename Visit>
    void for_each_neighbor(std::uint64_t code, Visit&& visit) {
        for (int i = k_ - 1; i >= 0; --i) {
            digits_[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(m_));
            code /= static_cast<std::uint64_t>(m_);
        }
        for (const auto& rule : rules_) {
            const int len = static_cast<int>(rule.from.size());
            for (int pos = 0; pos + len <= k_; ++pos) {
                if (!std::equal(rule.from.begin(), rule.from.end(), digits_.begin() + pos)) continue;
                std::uint64_t next = 0;
                for (int i = 0; i < k_; ++i) {
                    int d = (i >= pos && i < pos + len) ? rule.to[static_cast<std::size_t>(i - pos)]
                                                         : digits_[static_cast<std::size_t>(i)];
                    next = next * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(d);
                }
                visit(next);
            }
        }
    }

private:
    int n_;
    int m_;
    int k_;
    std::vector<std::uint64_t> place_;
    std::vector<Rule> rules_;
    std::vector<int> digits_;
};

void check_budget(const Presentation& p, int k, const OracleOptions& opts) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "length must be non-negative");
    std::uint64_t size = LengthSpace::space_size(p.alphabet_size(), k);
    if (size > opts.word_budget) {
        throw Error(ErrorCode::ResourceLimit,
                    "length " + std::to_string(k) + " needs " +
                        (size == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                           : std::to_string(size)) +
                        " words, budget is " + std::to_string(opts.word_budget));
    }
}

/// Scans all words of length k in lexicographic order; calls on_class with the
/// first (smallest) word of each class.
template <typename OnClass>
void scan_classes(const Presentation& p, int k, const OracleOptions& opts, OnClass&& on_class) {
    check_budget(p, k, opts);
    LengthSpace space(p, k);
    const std::uint64_t total = space.size();
    std::vector<bool> seen(total, false);
    std::vector<std::uint64_t> queue;
    for (std::uint64_t seed = 0; seed < total; ++seed) {
        if (seen[seed]) continue;
        on_class(space, seed);
        seen[seed] = true;
        queue.assign(1, seed);
        while (!queue.empty()) {
            std::uint64_t cur = queue.back();
            queue.pop_back();
            space.for_each_neighbor(cur, [&](std::uint64_t next) {
                if (!seen[next]) {
                    seen[next] = true;
                    queue.push_back(next);
                }
            });
        }
    }
}

void require_admitted(const Word& w, const Presentation& p) {
    if (!p.admits(w))
        throw Error(ErrorCode::InvalidArgument, "word " + w.to_string() + " is not over the presentation");
}

}  // namespace

LengthCensus count_by_length(const Presentation& p, int kmax, OracleOptions opts) {
    if (kmax < 0) throw Error(ErrorCode::InvalidArgument, "kmax must be non-negative");
    for (int k = 0; k <= kmax; ++k) check_budget(p, k, opts);
    LengthCensus census{p.strands(), p.kind(), {}};
    for (int k = 0; k <= kmax; ++k) {
        std::uint64_t classes = 0;
        scan_classes(p, k, opts, [&](LengthSpace&, std::uint64_t) { ++classes; });
        census.counts.emplace_back(std::to_string(classes));
    }
    return census;
}

std::vector<Word> enumerate_classes(const Presentation& p, int k, OracleOptions opts) {
    std::vector<Word> reps;
    scan_classes(p, k, opts, [&](LengthSpace& space, std::uint64_t seed) {
        reps.push_back(space.decode(seed));
    });
    return reps;
}

std::vector<Word> equivalence_class(const Word& w, const Presentation& p, OracleOptions opts) {
    require_admitted(w, p);
    const int k = static_cast<int>(w.length());
    LengthSpace space(p, k);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> queue{space.encode(w)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        std::uint64_t cur = queue.back();
        queue.pop_back();
        space.for_each_neighbor(cur, [&](std::uint64_t next) {
            if (seen.insert(next).second) queue.push_back(next);
        });
        if (seen.size() > opts.word_budget)
            throw Error(ErrorCode::ResourceLimit, "class of " + w.to_string() + " exceeds the word budget");
    }
    std::vector<std::uint64_t> codes(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
    std::vector<Word> out;
    out.reserve(codes.size());
    for (auto c : codes) out.push_back(space.decode(c));
    return out;
}

bool are_equivalent(const Word& a, const Word& b, const Presentation& p, OracleOptions opts) {
    require_admitted(a, p);
    require_admitted(b, p);
    if (a.length() != b.length()) return false;
    if (a == b) return true;
    auto cls = equivalence_class(a, p, opts);
    return std::binary_search(cls.begin(), cls.end(), b);
}

}  // namespace sbgrowth
