#pragma once

// Independent state-sum evaluation of closed tangle diagrams.
//
// Deliberately shares no code with the partition-map machinery: loops are
// counted with a union-find over crossing ports, and the smoothing table and
// sign rule are restated locally. It serves as a cross-check for jones_closed.

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "diagram.hpp"
#include "ring.hpp"

namespace cleaved {

namespace detail {

class PortUnion {
public:
    explicit PortUnion(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

/// (-1)^{n_-} q^{n_+ - 2n_-} Σ_ρ (-q)^{h(ρ)} (q + q^{-1})^{loops(ρ)} for a
/// closed, fully oriented diagram.
inline HalfLaurent kauffman_oracle(const TangleDiagram& t) {
    for (int n : t.half_counts)
        if (n != 0) throw DiagramError("state-sum oracle needs a closed diagram; signature " + t.signature());
    const std::size_t k = t.crossings.size();
    if (k > 30) throw DiagramError("too many crossings for a full state sum");
    auto slot = [](const Endpoint& e) { return 4 * static_cast<std::size_t>(e.index) + static_cast<std::size_t>(e.slot); };
    for (const auto& [a, b] : t.arcs)
        if (!a.is_port() || !b.is_port()) throw DiagramError("state-sum oracle: arc touches a boundary");

    int plus = 0, minus = 0;
    for (const auto& x : t.crossings) {
        if (x.dir02 == StrandDir::Unset || x.dir13 == StrandDir::Unset)
            throw DiagramError("state-sum oracle: crossing without orientation");
        // Head port of each strand; positive when under-head follows over-head counterclockwise.
        const int head02 = x.dir02 == StrandDir::Forward ? 2 : 0;
        const int head13 = x.dir13 == StrandDir::Forward ? 3 : 1;
        const int over_head = x.over02 ? head02 : head13;
        const int under_head = x.over02 ? head13 : head02;
        (under_head == (over_head + 1) % 4 ? plus : minus)++;
    }

    // Sum Σ_ρ (-q)^{h} δ^{loops} as counts indexed by (h, loops).
    std::vector<std::vector<std::int64_t>> counts(k + 1, std::vector<std::int64_t>(2 * k + 2, 0));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        detail::PortUnion uf(4 * k);
        std::size_t components = 4 * k;
        for (const auto& [a, b] : t.arcs)
            if (uf.unite(slot(a), slot(b))) --components;
        std::size_t h = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const bool one = ((bits >> c) & 1u) != 0;
            h += one ? 1 : 0;
            // Over-strand ports {o, o+2}; value 0 turns clockwise, 1 counterclockwise.
            const std::size_t o = t.crossings[c].over02 ? 0 : 1;
            for (std::size_t end : {o, o + 2}) {
                const std::size_t other = one ? (end + 1) % 4 : (end + 3) % 4;
                if (uf.unite(4 * c + end, 4 * c + other)) --components;
            }
        }
        const std::size_t loops = components + static_cast<std::size_t>(t.free_circles);
        if (loops >= counts[h].size()) counts[h].resize(loops + 1, 0);
        ++counts[h][loops];
    }
    HalfLaurent sum;
    const HalfLaurent delta = HalfLaurent::q(1) + HalfLaurent::q(-1);
    for (std::size_t h = 0; h < counts.size(); ++h) {
        for (std::size_t loops = 0; loops < counts[h].size(); ++loops) {
            if (counts[h][loops] == 0) continue;
            const HalfLaurent sign_q = HalfLaurent::monomial(2 * static_cast<int>(h), h % 2 == 0 ? 1 : -1);
            sum += sign_q * delta.pow(static_cast<unsigned>(loops)) * HalfLaurent(static_cast<long long>(counts[h][loops]));
        }
    }
    return sum * HalfLaurent::monomial(2 * (plus - 2 * minus), minus % 2 == 0 ? 1 : -1);
}

}  // namespace cleaved
