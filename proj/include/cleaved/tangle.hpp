#pragma once

// Tangle diagrams: resolutions, crossing signs and the state-sum partition map.
//
// Smoothing convention (ports 0..3 counterclockwise): the 0-smoothing joins
// each port of the over-strand to the port clockwise-adjacent to it, the
// 1-smoothing joins it to the counterclockwise-adjacent port. With this choice
// the 0-smoothing of a positive crossing is its oriented smoothing, so the
// positive braid generator resolves to the identity at 0 and to the cup-cap at
// 1. smoothing_convention_holds() checks exactly this.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "ring.hpp"

namespace cleaved {

/// Port pairs joined by smoothing `value` (0 or 1) of a crossing.
inline std::array<std::pair<int, int>, 2> smoothing_pairs(const Crossing& x, int value) {
    const int a = x.over02 ? 0 : 1;  // one port of the over-strand
    const int b = a + 2;
    if (value == 0) return {{{a, (a + 3) % 4}, {b, (b + 3) % 4}}};
    return {{{a, (a + 1) % 4}, {b, (b + 1) % 4}}};
}

/// +1 or -1 by the right-hand rule: positive when the under-strand direction is
/// the over-strand direction turned a quarter turn counterclockwise.
inline int crossing_sign(const TangleDiagram& t, int c) {
    const Crossing& x = t.crossings.at(static_cast<std::size_t>(c));
    if (x.dir02 == StrandDir::Unset || x.dir13 == StrandDir::Unset)
        throw DiagramError("crossing " + std::to_string(c) + " has no orientation");
    auto exit_port = [&](int strand) { return x.dir(strand) == StrandDir::Forward ? strand + 2 : strand; };
    const int over = x.over02 ? 0 : 1;
    const int over_exit = exit_port(over);
    const int under_exit = exit_port(1 - over);
    return under_exit == (over_exit + 1) % 4 ? 1 : -1;
}

/// (n_+, n_-). Requires a consistent orientation on every crossing.
inline std::pair<int, int> crossing_signs(const TangleDiagram& t) {
    for (const auto& comp : strand_components(t)) component_orientation(t, comp);
    int plus = 0, minus = 0;
    for (std::size_t c = 0; c < t.crossings.size(); ++c) (crossing_sign(t, static_cast<int>(c)) > 0 ? plus : minus)++;
    return {plus, minus};
}

/// Replaces crossing `c` by its smoothing `value`, keeping the other crossings
/// in order. Orientations are kept when they remain consistent (the oriented
/// smoothing) and cleared otherwise.
inline TangleDiagram resolve_crossing(const TangleDiagram& t, int c, int value) {
    if (c < 0 || c >= static_cast<int>(t.crossings.size())) throw DiagramError("crossing index out of range");
    require_valid(t);
    const auto pairs = smoothing_pairs(t.crossings[static_cast<std::size_t>(c)], value);
    std::array<int, 4> joined{};
    for (auto [a, b] : pairs) {
        joined[static_cast<std::size_t>(a)] = b;
        joined[static_cast<std::size_t>(b)] = a;
    }
    const auto partner = detail::arc_partners(t);
    auto renumber = [c](Endpoint e) {
        if (e.is_port() && e.index > c) --e.index;
        return e;
    };
    auto is_here = [c](const Endpoint& e) { return e.is_port() && e.index == c; };

    TangleDiagram r;
    r.half_counts = t.half_counts;
    r.free_circles = t.free_circles;
    for (std::size_t k = 0; k < t.crossings.size(); ++k)
        if (static_cast<int>(k) != c) r.crossings.push_back(t.crossings[k]);
    std::set<Endpoint> done;
    for (const auto& [a, b] : t.arcs) {
        if (is_here(a) && is_here(b)) continue;
        for (Endpoint start : {a, b}) {
            if (is_here(start)) continue;
            if (done.count(start)) break;
            // Walk through the smoothed crossing until leaving it.
            Endpoint end = partner.at(start);
            while (is_here(end)) end = partner.at(Endpoint::port(c, joined[static_cast<std::size_t>(end.slot)]));
            done.insert(start);
            done.insert(end);
            r.arcs.emplace_back(renumber(start), renumber(end));
            break;
        }
    }
    // Loops made only of arcs between ports of c and smoothing links.
    std::set<int> seen;
    for (int p = 0; p < 4; ++p) {
        if (seen.count(p)) continue;
        bool closed = true;
        int cur = p;
        std::vector<int> visited;
        do {
            visited.push_back(cur);
            const Endpoint other = partner.at(Endpoint::port(c, cur));
            if (!is_here(other)) {
                closed = false;
                break;
            }
            visited.push_back(other.slot);
            cur = joined[static_cast<std::size_t>(other.slot)];
        } while (cur != p);
        for (int v : visited) seen.insert(v);
        if (closed) ++r.free_circles;
    }
    try {
        for (const auto& comp : strand_components(r)) component_orientation(r, comp);
    } catch (const DiagramError&) {
        for (auto& x : r.crossings) x.dir02 = x.dir13 = StrandDir::Unset;
    }
    return r;
}

/// The planar diagram of the resolution `rho` (one 0/1 value per crossing).
inline PlanarDiagram resolve(const TangleDiagram& t, const std::vector<int>& rho) {
    if (rho.size() != t.crossings.size()) throw DiagramError("resolution must assign a value to every crossing");
    require_valid(t);
    std::map<Endpoint, Endpoint> smooth;
    for (std::size_t c = 0; c < t.crossings.size(); ++c) {
        for (auto [a, b] : smoothing_pairs(t.crossings[c], rho[c])) {
            smooth[Endpoint::port(static_cast<int>(c), a)] = Endpoint::port(static_cast<int>(c), b);
            smooth[Endpoint::port(static_cast<int>(c), b)] = Endpoint::port(static_cast<int>(c), a);
        }
    }
    const auto partner = detail::arc_partners(t);
    PlanarDiagram p;
    p.half_counts = t.half_counts;
    p.free_circles = t.free_circles;
    std::set<Endpoint> seen;
    for (std::size_t i = 0; i < t.boundary_count(); ++i) {
        for (int k = 1; k <= 2 * t.half_counts[i]; ++k) {
            const Endpoint start = Endpoint::boundary(static_cast<int>(i), k);
            if (seen.count(start)) continue;
            Endpoint e = partner.at(start);
            while (e.is_port()) {
                seen.insert(e);
                const Endpoint f = smooth.at(e);
                seen.insert(f);
                e = partner.at(f);
            }
            seen.insert(start);
            seen.insert(e);
            p.arcs.emplace_back(start, e);
        }
    }
    for (const auto& [port, other] : smooth) {
        if (seen.count(port)) continue;
        Endpoint e = port;
        do {
            seen.insert(e);
            const Endpoint f = partner.at(e);
            seen.insert(f);
            e = smooth.at(f);
        } while (e != port);
        ++p.free_circles;
    }
    return p;
}

/// Σ_ρ (-q)^{h(ρ)} Z_{ρ(T)}, resolutions in binary-counter order (crossing 0
/// is the most significant digit).
inline PartitionMatrix unshifted_partition(const TangleDiagram& t, unsigned workers = worker_count()) {
    require_valid(t);
    const std::size_t k = t.crossings.size();
    if (k > 24) throw DiagramError("too many crossings for a full state sum");
    PartitionMatrix total(t.half_counts[0], std::vector<int>(t.half_counts.begin() + 1, t.half_counts.end()));
    const HalfLaurent minus_q = -HalfLaurent::q();
    std::vector<HalfLaurent> powers{HalfLaurent(1)};
    for (std::size_t h = 1; h <= k; ++h) powers.push_back(powers.back() * minus_q);
    std::vector<int> rho(k);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::size_t h = 0;
        for (std::size_t c = 0; c < k; ++c) {
            rho[c] = static_cast<int>((bits >> (k - 1 - c)) & 1u);
            h += static_cast<std::size_t>(rho[c]);
        }
        total = total + partition_map(resolve(t, rho), workers).scaled(powers[h]);
    }
    return total;
}

/// (-1)^{n_-} q^{n_+ - 2 n_-}
inline HalfLaurent orientation_shift(int n_plus, int n_minus) {
    return HalfLaurent::monomial(2 * (n_plus - 2 * n_minus), n_minus % 2 == 0 ? 1 : -1);
}

/// Z_T = (-1)^{n_-} q^{n_+ - 2 n_-} Z̃_T. Requires an oriented diagram.
inline PartitionMatrix partition_tangle(const TangleDiagram& t, unsigned workers = worker_count()) {
    const auto [plus, minus] = crossing_signs(t);
    return unshifted_partition(t, workers).scaled(orientation_shift(plus, minus));
}

inline TangleDiagram mirror(TangleDiagram t) {
    for (auto& x : t.crossings) x.over02 = !x.over02;
    return t;
}

inline bool is_closed(const TangleDiagram& t) {
    for (int n : t.half_counts)
        if (n != 0) return false;
    return true;
}

/// The Jones polynomial (unknot = q + q^{-1}) of a diagram without boundary points.
inline HalfLaurent jones_closed(const TangleDiagram& t, unsigned workers = worker_count()) {
    if (!is_closed(t)) throw DiagramError("jones: diagram has boundary points; signature " + t.signature());
    return partition_tangle(t, workers).at(0, 0);
}

/// Annular positive generator of the two-strand braid group. Inner boundary is
/// the top of the braid; ports 0..3 are top-left, bottom-left, bottom-right,
/// top-right; both strands run downward.
inline TangleDiagram positive_generator_annulus() {
    TangleDiagram t;
    t.half_counts = {1, 1};
    t.crossings.push_back({false, StrandDir::Forward, StrandDir::Backward});
    t.arcs = {{Endpoint::boundary(1, 1), Endpoint::port(0, 0)},
              {Endpoint::boundary(1, 2), Endpoint::port(0, 3)},
              {Endpoint::port(0, 1), Endpoint::boundary(0, 1)},
              {Endpoint::port(0, 2), Endpoint::boundary(0, 2)}};
    return t;
}

/// Checks the conventions the state sum depends on: the positive generator is
/// a positive crossing, its 0-resolution is the identity and its 1-resolution
/// is the cup-cap diagram.
inline bool smoothing_convention_holds() {
    const auto sigma = positive_generator_annulus();
    if (!validate(sigma, true).ok()) return false;
    if (crossing_signs(sigma) != std::pair<int, int>{1, 0}) return false;
    if (!(resolve(sigma, {0}) == identity_diagram(1))) return false;
    return resolve(sigma, {1}) == annular_tl_generator(1, 1);
}

}  // namespace cleaved
