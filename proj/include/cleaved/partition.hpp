#pragma once

// Multiply cleaved links and the partition map Z_P of a planar diagram.
//
// A skeleton fills every boundary disc of P with a noncrossing matching (the
// filling of boundary 0 lives in the outer disc). The union of the arcs of P
// and the fillings is a set of circles; decorating each circle with a sign
// gives a multiply cleaved link M. Its weight is the product over circles of
// q^{+(1 - N/2)} or q^{-(1 - N/2)}, N being the number of boundaries the circle
// meets, and its boundary at D_i is a cleaved link. Z_P sums weights.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cleaved_link.hpp"
#include "combinatorics.hpp"
#include "diagram.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "ring.hpp"

namespace cleaved {

struct Circle {
    std::vector<Endpoint> points;  // boundary points in traversal order; empty for a free circle
    std::vector<int> boundaries;   // distinct boundaries met, ascending

    int boundary_count() const { return static_cast<int>(boundaries.size()); }
    bool is_free() const { return points.empty(); }
};

/// A (possibly undecorated) multiply cleaved link. Circles are in canonical
/// order: circles through boundary points by least (boundary, point), then the
/// free circles of the base diagram.
struct MultiCleavedLink {
    std::shared_ptr<const PlanarDiagram> base;
    std::vector<NoncrossingMatching> fillings;  // one per boundary 0..m
    std::vector<Circle> circles;
    std::vector<Sign> decorations;  // empty for a skeleton

    // Cleaved-link data at each boundary: inside/outside matchings and, for
    // each cycle of trace_cycles(inside, outside), the circle it belongs to.
    std::vector<NoncrossingMatching> inside;
    std::vector<NoncrossingMatching> outside;
    std::vector<std::vector<int>> cycle_circle;

    bool decorated() const { return decorations.size() == circles.size(); }
};

namespace detail {

/// Flat numbering of the boundary points of a planar diagram.
struct PointTable {
    std::vector<int> offset;    // first id of each boundary; offset.back() = total
    std::vector<int> boundary;  // id -> boundary index
    std::vector<int> arc;       // id -> id of the arc partner

    explicit PointTable(const PlanarDiagram& p) {
        offset.assign(p.boundary_count() + 1, 0);
        for (std::size_t i = 0; i < p.boundary_count(); ++i) offset[i + 1] = offset[i] + 2 * p.half_counts[i];
        boundary.resize(static_cast<std::size_t>(offset.back()));
        for (std::size_t i = 0; i < p.boundary_count(); ++i)
            for (int id = offset[i]; id < offset[i + 1]; ++id) boundary[static_cast<std::size_t>(id)] = static_cast<int>(i);
        arc.assign(static_cast<std::size_t>(offset.back()), -1);
        for (const auto& [a, b] : p.arcs) {
            if (!a.is_boundary() || !b.is_boundary()) throw DiagramError("planar diagram arc ends at a crossing port");
            arc[static_cast<std::size_t>(id(a.index, a.slot))] = id(b.index, b.slot);
            arc[static_cast<std::size_t>(id(b.index, b.slot))] = id(a.index, a.slot);
        }
    }
    int id(int i, int p) const { return offset[static_cast<std::size_t>(i)] + p - 1; }
    int point(int id) const { return id - offset[static_cast<std::size_t>(boundary[static_cast<std::size_t>(id)])] + 1; }
    int total() const { return offset.back(); }
};

inline MultiCleavedLink build_skeleton(const std::shared_ptr<const PlanarDiagram>& base, const PointTable& table,
                                       std::vector<NoncrossingMatching> fillings) {
    const PlanarDiagram& p = *base;
    const std::size_t bcount = p.boundary_count();
    MultiCleavedLink m;
    m.base = base;
    m.fillings = std::move(fillings);
    const int total = table.total();
    std::vector<int> fill(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < bcount; ++i)
        for (int pt = 1; pt <= 2 * p.half_counts[i]; ++pt)
            fill[static_cast<std::size_t>(table.id(static_cast<int>(i), pt))] =
                table.id(static_cast<int>(i), m.fillings[i].partner(pt));

    // Circles, traced from their least point: arc, filling, arc, ...
    std::vector<int> circle_of(static_cast<std::size_t>(total), -1);
    for (int start = 0; start < total; ++start) {
        if (circle_of[static_cast<std::size_t>(start)] >= 0) continue;
        const int c = static_cast<int>(m.circles.size());
        Circle circle;
        std::vector<bool> met(bcount, false);
        int v = start;
        do {
            for (int x : {v, table.arc[static_cast<std::size_t>(v)]}) {
                circle_of[static_cast<std::size_t>(x)] = c;
                const int b = table.boundary[static_cast<std::size_t>(x)];
                circle.points.push_back(Endpoint::boundary(b, table.point(x)));
                met[static_cast<std::size_t>(b)] = true;
            }
            v = fill[static_cast<std::size_t>(table.arc[static_cast<std::size_t>(v)])];
        } while (v != start);
        for (std::size_t b = 0; b < bcount; ++b)
            if (met[b]) circle.boundaries.push_back(static_cast<int>(b));
        m.circles.push_back(std::move(circle));
    }
    for (int k = 0; k < p.free_circles; ++k) m.circles.emplace_back();

    // Boundary cleaved links. The matching of ∂D_i through the far side follows
    // arc, filling, arc, ... until it returns to boundary i.
    for (std::size_t i = 0; i < bcount; ++i) {
        const int size = 2 * p.half_counts[i];
        std::vector<int> through(static_cast<std::size_t>(size + 1), 0);
        for (int pt = 1; pt <= size; ++pt) {
            int w = table.arc[static_cast<std::size_t>(table.id(static_cast<int>(i), pt))];
            while (table.boundary[static_cast<std::size_t>(w)] != static_cast<int>(i))
                w = table.arc[static_cast<std::size_t>(fill[static_cast<std::size_t>(w)])];
            through[static_cast<std::size_t>(pt)] = table.point(w);
        }
        NoncrossingMatching traced;
        try {
            traced = NoncrossingMatching::from_partners(std::move(through));
        } catch (const std::invalid_argument&) {
            throw DiagramError("the matching traced at boundary " + std::to_string(i) +
                               " is crossing; the diagram is not planar");
        }
        if (i == 0) {
            m.inside.push_back(std::move(traced));
            m.outside.push_back(m.fillings[0]);
        } else {
            m.inside.push_back(m.fillings[i]);
            m.outside.push_back(std::move(traced));
        }
        const auto cycles = trace_cycles(m.inside.back(), m.outside.back());
        std::vector<int> owner;
        for (const auto& cyc : cycles.cycles)
            owner.push_back(circle_of[static_cast<std::size_t>(table.id(static_cast<int>(i), cyc.front()))]);
        m.cycle_circle.push_back(std::move(owner));
    }
    return m;
}

inline std::uint64_t skeleton_count(const PlanarDiagram& p) {
    std::uint64_t s = 1;
    for (int n : p.half_counts) s *= enumerate_noncrossing(n).size();
    return s;
}

/// Fillings of skeleton number s (mixed radix, boundary 0 most significant).
inline std::vector<NoncrossingMatching> fillings_of(const PlanarDiagram& p, std::uint64_t s) {
    std::vector<NoncrossingMatching> f(p.boundary_count());
    for (std::size_t i = p.boundary_count(); i-- > 0;) {
        const auto& all = enumerate_noncrossing(p.half_counts[i]);
        f[i] = all[static_cast<std::size_t>(s % all.size())];
        s /= all.size();
    }
    return f;
}

inline void require_planar_input(const PlanarDiagram& p) {
    const auto report = validate(p, false);
    if (!report.ok()) throw DiagramError(report.summary());
}

}  // namespace detail

/// All skeletons of P, in mixed-radix order over the per-boundary fillings
/// (boundary 0 most significant).
inline std::vector<MultiCleavedLink> enumerate_fillings(const PlanarDiagram& p) {
    detail::require_planar_input(p);
    auto base = std::make_shared<const PlanarDiagram>(p);
    const detail::PointTable table(p);
    std::vector<MultiCleavedLink> out;
    const std::uint64_t count = detail::skeleton_count(p);
    for (std::uint64_t s = 0; s < count; ++s) out.push_back(detail::build_skeleton(base, table, detail::fillings_of(p, s)));
    return out;
}

/// Decoration number `bits` of a skeleton: circle j gets bit (k-1-j), 1 = minus.
inline MultiCleavedLink decorate(const MultiCleavedLink& skeleton, std::uint64_t bits) {
    MultiCleavedLink m = skeleton;
    const std::size_t k = m.circles.size();
    m.decorations.resize(k);
    for (std::size_t j = 0; j < k; ++j) m.decorations[j] = ((bits >> (k - 1 - j)) & 1u) ? Sign::Minus : Sign::Plus;
    return m;
}

/// Exponent of q^{1/2} contributed by one circle.
inline int circle_weight_exp2(int boundaries_met, Sign s) {
    return s == Sign::Plus ? 2 - boundaries_met : boundaries_met - 2;
}

inline HalfLaurent weight(const MultiCleavedLink& m) {
    if (!m.decorated()) throw std::invalid_argument("weight: multiply cleaved link is not decorated");
    int e = 0;
    for (std::size_t c = 0; c < m.circles.size(); ++c) e += circle_weight_exp2(m.circles[c].boundary_count(), m.decorations[c]);
    return HalfLaurent::monomial(e);
}

/// ∂_i(M): the cleaved link M induces on boundary i.
inline CleavedLink boundary(const MultiCleavedLink& m, int i) {
    if (!m.decorated()) throw std::invalid_argument("boundary: multiply cleaved link is not decorated");
    if (i < 0 || i >= static_cast<int>(m.fillings.size())) throw std::out_of_range("boundary index out of range");
    const auto k = static_cast<std::size_t>(i);
    std::vector<Sign> dec;
    for (int c : m.cycle_circle[k]) dec.push_back(m.decorations[static_cast<std::size_t>(c)]);
    return {m.inside[k], m.outside[k], std::move(dec)};
}

/// Reference implementation of Z_P: enumerates every decorated filling and
/// evaluates weight and boundaries one at a time.
inline PartitionMatrix partition_map_reference(const PlanarDiagram& p) {
    const std::vector<int> col_ns(p.half_counts.begin() + 1, p.half_counts.end());
    PartitionMatrix z(p.half_counts[0], col_ns);
    for (const auto& skel : enumerate_fillings(p)) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << skel.circles.size()); ++bits) {
            const auto m = decorate(skel, bits);
            const std::uint64_t row = cleaved_basis(p.half_counts[0]).index_of(boundary(m, 0));
            std::vector<std::size_t> idx;
            for (std::size_t i = 1; i < p.boundary_count(); ++i)
                idx.push_back(cleaved_basis(p.half_counts[i]).index_of(boundary(m, static_cast<int>(i))));
            z.add_to(row, join_tuple(idx, col_ns), weight(m));
        }
    }
    return z;
}

namespace detail {

struct KeyHash {
    std::size_t operator()(const PartitionMatrix::Key& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
    }
};

using EntryAccumulator = std::unordered_map<PartitionMatrix::Key, MonomialAccumulator, KeyHash>;

/// Adds the contributions of all decorations of one skeleton. Row and column
/// indices are affine in the decoration bits, so each circle contributes a
/// fixed offset to each when it carries a minus sign.
inline void accumulate_skeleton(const MultiCleavedLink& s, const std::vector<int>& ns, EntryAccumulator& acc) {
    const std::size_t k = s.circles.size();
    std::vector<std::uint64_t> row_step(k, 0), col_step(k, 0);
    std::vector<int> exp_step(k, 0);
    int exp_base = 0;
    for (std::size_t c = 0; c < k; ++c) {
        const int n_met = s.circles[c].boundary_count();
        exp_base += circle_weight_exp2(n_met, Sign::Plus);
        exp_step[c] = circle_weight_exp2(n_met, Sign::Minus) - circle_weight_exp2(n_met, Sign::Plus);
    }
    std::uint64_t row_base = 0, col_base = 0, stride = 1;
    for (std::size_t i = ns.size(); i-- > 0;) {
        const auto& basis = cleaved_basis(ns[i]);
        const std::size_t in_idx = matching_index(s.inside[i]);
        const std::size_t out_idx = matching_index(s.outside[i]);
        const std::uint64_t offset = basis.block_offset(in_idx, out_idx);
        const auto& owners = s.cycle_circle[i];
        const std::size_t cycles = owners.size();
        std::uint64_t& base = (i == 0) ? row_base : col_base;
        auto& step = (i == 0) ? row_step : col_step;
        const std::uint64_t scale = (i == 0) ? 1 : stride;
        base += offset * scale;
        for (std::size_t j = 0; j < cycles; ++j)
            step[static_cast<std::size_t>(owners[j])] += (std::uint64_t{1} << (cycles - 1 - j)) * scale;
        if (i > 0) stride *= basis.size();
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::uint64_t row = row_base, col = col_base;
        int e = exp_base;
        for (std::size_t c = 0; c < k; ++c) {
            if ((bits >> (k - 1 - c)) & 1u) {
                row += row_step[c];
                col += col_step[c];
                e += exp_step[c];
            }
        }
        acc[{row, col}].add(e);
    }
}

}  // namespace detail

/// Z_P as an exact matrix. Skeletons may be processed by several workers
/// (see worker_count); results are merged by addition, so the output does not
/// depend on the worker count.
inline PartitionMatrix partition_map(const PlanarDiagram& p, unsigned workers = worker_count()) {
    detail::require_planar_input(p);
    auto base = std::make_shared<const PlanarDiagram>(p);
    const detail::PointTable table(p);
    const std::uint64_t count = detail::skeleton_count(p);
    std::vector<detail::EntryAccumulator> partial(std::max(1u, workers));
    parallel_blocks(static_cast<std::size_t>(count), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
        for (std::size_t s = begin; s < end; ++s)
            detail::accumulate_skeleton(detail::build_skeleton(base, table, detail::fillings_of(p, s)), p.half_counts,
                                        partial[w]);
    });
    for (std::size_t w = 1; w < partial.size(); ++w)
        for (auto& [key, a] : partial[w]) partial[0][key].merge(a);
    PartitionMatrix z(p.half_counts[0], std::vector<int>(p.half_counts.begin() + 1, p.half_counts.end()));
    for (const auto& [key, a] : partial[0]) z.set(key.first, key.second, a.value());
    return z;
}

/// Gram matrix of the annular pairing: I_{2n} ⊗ I_{2n} -> I_0.
inline PartitionMatrix pairing_matrix(int n) { return partition_map(pairing_diagram(n)); }

/// ⟨a, b⟩ under the pairing diagram.
inline HalfLaurent pairing(const CleavedLink& a, const CleavedLink& b) {
    if (a.half_count() != b.half_count()) throw BasisMismatch("pairing: links of different sizes");
    return pairing_matrix(a.half_count()).at(CleavedLink::make({}, {}, {}), {a, b});
}

/// N ∘_i M: glues a decorated filling M of T into boundary i of a decorated
/// filling N of R, producing a decorated filling of compose(R, i, T). Requires
/// ∂_i N = ∂_0 M.
inline MultiCleavedLink glue(const MultiCleavedLink& n, int i, const MultiCleavedLink& m) {
    if (!n.decorated() || !m.decorated()) throw std::invalid_argument("glue: both links must be decorated");
    if (!(boundary(n, i) == boundary(m, 0)))
        throw std::invalid_argument("glue: boundary " + std::to_string(i) + " of the outer link does not match");
    const auto comp = compose_with_trace(to_tangle(*n.base), i, to_tangle(*m.base));
    const PlanarDiagram cp = to_planar(comp.diagram);
    auto base = std::make_shared<const PlanarDiagram>(cp);
    const int mt = static_cast<int>(m.base->boundary_count()) - 1;

    std::vector<NoncrossingMatching> fillings(n.fillings.begin(), n.fillings.begin() + i);
    fillings.insert(fillings.end(), m.fillings.begin() + 1, m.fillings.end());
    fillings.insert(fillings.end(), n.fillings.begin() + i + 1, n.fillings.end());
    MultiCleavedLink g = detail::build_skeleton(base, detail::PointTable(cp), std::move(fillings));

    auto circle_at = [](const MultiCleavedLink& x, const Endpoint& e) -> std::size_t {
        for (std::size_t c = 0; c < x.circles.size(); ++c)
            for (const auto& pt : x.circles[c].points)
                if (pt == e) return c;
        throw std::logic_error("glue: point not found on any circle");
    };
    const std::size_t n_nonfree = n.circles.size() - static_cast<std::size_t>(n.base->free_circles);
    const std::size_t m_nonfree = m.circles.size() - static_cast<std::size_t>(m.base->free_circles);
    g.decorations.resize(g.circles.size());
    std::size_t free_seen = 0;
    for (std::size_t c = 0; c < g.circles.size(); ++c) {
        const Circle& circle = g.circles[c];
        if (!circle.is_free()) {
            const Endpoint e = circle.points.front();
            if (e.index < i) g.decorations[c] = n.decorations[circle_at(n, e)];
            else if (e.index < i + mt) g.decorations[c] = m.decorations[circle_at(m, Endpoint::boundary(e.index - i + 1, e.slot))];
            else g.decorations[c] = n.decorations[circle_at(n, Endpoint::boundary(e.index - mt + 1, e.slot))];
            continue;
        }
        // Free circles: those of R, then those of T, then closed chains.
        const std::size_t f = free_seen++;
        if (f < static_cast<std::size_t>(n.base->free_circles)) {
            g.decorations[c] = n.decorations[n_nonfree + f];
        } else if (f < static_cast<std::size_t>(n.base->free_circles + m.base->free_circles)) {
            g.decorations[c] = m.decorations[m_nonfree + f - static_cast<std::size_t>(n.base->free_circles)];
        } else {
            const int k = comp.closed_chain_points[f - static_cast<std::size_t>(n.base->free_circles + m.base->free_circles)];
            g.decorations[c] = n.decorations[circle_at(n, Endpoint::boundary(i, k))];
        }
    }
    return g;
}

}  // namespace cleaved
