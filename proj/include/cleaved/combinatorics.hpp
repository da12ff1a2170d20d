#pragma once

// Noncrossing perfect matchings of 2n cyclically ordered points and the cycle
// structure of a pair of matchings.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cleaved {

/// True iff `partner` (1-based, partner[0] ignored) is a fixed-point-free
/// involution on 1..2n whose pairs do not interleave cyclically.
inline bool is_noncrossing(const std::vector<int>& partner) {
    const int size = static_cast<int>(partner.size()) - 1;
    // Stack check: scanning left to right, every closing point must close the
    // most recently opened arc.
    std::vector<int> open;
    for (int p = 1; p <= size; ++p) {
        const int r = partner[static_cast<std::size_t>(p)];
        if (r > p) {
            open.push_back(p);
        } else {
            if (open.empty() || open.back() != r) return false;
            open.pop_back();
        }
    }
    return open.empty();
}

class NoncrossingMatching {
public:
    NoncrossingMatching() : partner_(1, 0) {}

    /// Validates a partner table (1-based; entry 0 unused).
    static NoncrossingMatching from_partners(std::vector<int> partner) {
        if (partner.empty() || (partner.size() - 1) % 2 != 0)
            throw std::invalid_argument("matching must cover an even number of points");
        const int size = static_cast<int>(partner.size()) - 1;
        partner[0] = 0;
        for (int p = 1; p <= size; ++p) {
            const int r = partner[static_cast<std::size_t>(p)];
            if (r < 1 || r > size || r == p || partner[static_cast<std::size_t>(r)] != p)
                throw std::invalid_argument("matching is not a fixed-point-free involution");
        }
        if (!is_noncrossing(partner)) throw std::invalid_argument("matching has crossing pairs");
        NoncrossingMatching m;
        m.partner_ = std::move(partner);
        return m;
    }

    static NoncrossingMatching from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<int> partner(static_cast<std::size_t>(2 * n + 1), 0);
        for (auto [a, b] : pairs) {
            if (a < 1 || b < 1 || a > 2 * n || b > 2 * n)
                throw std::invalid_argument("matching point out of range");
            if (partner[static_cast<std::size_t>(a)] || partner[static_cast<std::size_t>(b)])
                throw std::invalid_argument("matching point used twice");
            partner[static_cast<std::size_t>(a)] = b;
            partner[static_cast<std::size_t>(b)] = a;
        }
        return from_partners(std::move(partner));
    }

    /// Parses "1-4,2-3"; the empty string is the n = 0 matching.
    static NoncrossingMatching parse(std::string_view text) {
        std::vector<std::pair<int, int>> pairs;
        int maxp = 0;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            std::string_view item = text.substr(pos, comma - pos);
            const std::size_t dash = item.find('-');
            if (dash == std::string_view::npos) throw std::invalid_argument("bad matching pair: " + std::string(item));
            const int a = std::stoi(std::string(item.substr(0, dash)));
            const int b = std::stoi(std::string(item.substr(dash + 1)));
            pairs.emplace_back(a, b);
            maxp = std::max({maxp, a, b});
            pos = comma + 1;
        }
        if (maxp % 2 != 0 || static_cast<int>(pairs.size()) * 2 != maxp)
            throw std::invalid_argument("matching does not cover 1..2n: " + std::string(text));
        return from_pairs(maxp / 2, pairs);
    }

    int half_count() const { return static_cast<int>(partner_.size() - 1) / 2; }
    int point_count() const { return static_cast<int>(partner_.size()) - 1; }
    int partner(int p) const { return partner_[static_cast<std::size_t>(p)]; }
    const std::vector<int>& partners() const { return partner_; }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int p = 1; p <= point_count(); ++p)
            if (partner(p) > p) out.emplace_back(p, partner(p));
        return out;
    }

    /// Relabels every point p to perm[p] (perm 1-based, a bijection of 1..2n).
    /// Used for reflections, which preserve noncrossingness.
    NoncrossingMatching relabeled(const std::vector<int>& perm) const {
        std::vector<int> image(partner_.size(), 0);
        for (int p = 1; p <= point_count(); ++p)
            image[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] =
                perm[static_cast<std::size_t>(partner(p))];
        return from_partners(std::move(image));
    }

    std::string to_string() const {
        std::string s;
        for (auto [a, b] : pairs()) {
            if (!s.empty()) s += ',';
            s += std::to_string(a) + "-" + std::to_string(b);
        }
        return s;
    }

    friend bool operator==(const NoncrossingMatching&, const NoncrossingMatching&) = default;
    /// Lexicographic by partner of 1, partner of 2, ...
    friend auto operator<=>(const NoncrossingMatching& a, const NoncrossingMatching& b) {
        return a.partner_ <=> b.partner_;
    }

private:
    std::vector<int> partner_;
};

inline std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
    return c;
}

namespace detail {

inline void enumerate_into(std::vector<int>& partner, int lo, int hi, std::vector<std::vector<int>>& sink,
                           const std::vector<std::pair<int, int>>& pending) {
    // Fill the interval [lo, hi] and then the pending intervals.
    if (lo > hi) {
        if (pending.empty()) {
            sink.push_back(partner);
            return;
        }
        auto rest = pending;
        auto [a, b] = rest.back();
        rest.pop_back();
        enumerate_into(partner, a, b, sink, rest);
        return;
    }
    for (int r = lo + 1; r <= hi; r += 2) {
        partner[static_cast<std::size_t>(lo)] = r;
        partner[static_cast<std::size_t>(r)] = lo;
        auto next = pending;
        if (r + 1 <= hi) next.emplace_back(r + 1, hi);
        enumerate_into(partner, lo + 1, r - 1, sink, next);
    }
    partner[static_cast<std::size_t>(lo)] = 0;
}

}  // namespace detail

/// All noncrossing matchings on 2n points, lexicographic by (partner of 1,
/// partner of 2, ...). The result is cached; the reference stays valid.
inline const std::vector<NoncrossingMatching>& enumerate_noncrossing(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_noncrossing: negative half-count");
    static std::mutex mutex;
    static std::map<int, std::vector<NoncrossingMatching>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> raw;
    std::vector<int> partner(static_cast<std::size_t>(2 * n + 1), 0);
    detail::enumerate_into(partner, 1, 2 * n, raw, {});
    std::sort(raw.begin(), raw.end());
    std::vector<NoncrossingMatching> out;
    out.reserve(raw.size());
    for (auto& p : raw) out.push_back(NoncrossingMatching::from_partners(std::move(p)));
    return cache.emplace(n, std::move(out)).first->second;
}

/// Position of m in enumerate_noncrossing(m.half_count()).
inline std::size_t matching_index(const NoncrossingMatching& m) {
    const auto& all = enumerate_noncrossing(m.half_count());
    auto it = std::lower_bound(all.begin(), all.end(), m);
    if (it == all.end() || *it != m) throw std::logic_error("matching not found in enumeration");
    return static_cast<std::size_t>(it - all.begin());
}

/// Components of inside ∪ outside. Each cycle is listed as its alternating
/// walk starting at its least point along the inside arc; cycles are sorted by
/// least point.
struct CyclePartition {
    std::vector<std::vector<int>> cycles;
    std::vector<int> cycle_of;  // 1-based point -> cycle index; entry 0 unused

    std::size_t count() const { return cycles.size(); }
};

inline CyclePartition trace_cycles(const NoncrossingMatching& inside, const NoncrossingMatching& outside) {
    if (inside.half_count() != outside.half_count())
        throw std::invalid_argument("trace_cycles: matchings of different sizes");
    const int size = inside.point_count();
    CyclePartition out;
    out.cycle_of.assign(static_cast<std::size_t>(size + 1), -1);
    out.cycle_of[0] = 0;
    for (int start = 1; start <= size; ++start) {
        if (out.cycle_of[static_cast<std::size_t>(start)] >= 0) continue;
        const int idx = static_cast<int>(out.cycles.size());
        std::vector<int> walk;
        int p = start;
        do {
            walk.push_back(p);
            out.cycle_of[static_cast<std::size_t>(p)] = idx;
            const int r = inside.partner(p);
            walk.push_back(r);
            out.cycle_of[static_cast<std::size_t>(r)] = idx;
            p = outside.partner(r);
        } while (p != start);
        out.cycles.push_back(std::move(walk));
    }
    return out;
}

}  // namespace cleaved
