#pragma once

// Planar and tangle diagrams over a disc configuration (D_0; D_1, ..., D_m).
//
// Boundary i carries 2 n_i points numbered 1..2n_i counterclockwise from its
// basepoint. A tangle diagram additionally has crossings; each crossing has
// four ports numbered 0..3 counterclockwise, with strands (0-2) and (1-3).
// Everything is combinatorial: a diagram is its arcs (endpoint pairs) plus a
// count of free circles.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "planar_map.hpp"

namespace cleaved {

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SignatureMismatch : public DiagramError {
public:
    using DiagramError::DiagramError;
};

struct Endpoint {
    enum class Kind : std::uint8_t { Boundary = 0, Port = 1 };
    Kind kind = Kind::Boundary;
    int index = 0;  // boundary index, or crossing index
    int slot = 0;   // point 1..2n, or port 0..3

    static Endpoint boundary(int i, int p) { return {Kind::Boundary, i, p}; }
    static Endpoint port(int c, int p) { return {Kind::Port, c, p}; }
    bool is_boundary() const { return kind == Kind::Boundary; }
    bool is_port() const { return kind == Kind::Port; }

    std::string to_string() const {
        return is_boundary() ? std::to_string(index) + ":" + std::to_string(slot)
                             : "x" + std::to_string(index) + ":" + std::to_string(slot);
    }

    friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

using Arc = std::pair<Endpoint, Endpoint>;

inline std::string signature_string(const std::vector<int>& half_counts) {
    std::string s = "(";
    for (std::size_t i = 0; i < half_counts.size(); ++i) {
        if (i == 1) s += ";";
        else if (i > 1) s += ",";
        s += std::to_string(half_counts[i]);
    }
    return s + ")";
}

/// Direction of travel along one strand of a crossing. Forward means from the
/// lower port to the higher one (0 -> 2, or 1 -> 3).
enum class StrandDir : std::int8_t { Unset = 0, Forward = 1, Backward = -1 };

struct Crossing {
    bool over02 = true;  // strand 0-2 passes over
    StrandDir dir02 = StrandDir::Unset;
    StrandDir dir13 = StrandDir::Unset;

    StrandDir& dir(int strand) { return strand == 0 ? dir02 : dir13; }
    StrandDir dir(int strand) const { return strand == 0 ? dir02 : dir13; }

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PlanarDiagram {
    std::vector<int> half_counts{0};  // n_0, n_1, ..., n_m
    std::vector<Arc> arcs;            // boundary endpoints only
    int free_circles = 0;

    std::size_t boundary_count() const { return half_counts.size(); }
    std::string signature() const { return signature_string(half_counts); }

    /// Arcs with ordered endpoints, sorted.
    PlanarDiagram canonical() const {
        PlanarDiagram c = *this;
        for (auto& [a, b] : c.arcs)
            if (b < a) std::swap(a, b);
        std::sort(c.arcs.begin(), c.arcs.end());
        return c;
    }
    friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
        const auto ca = a.canonical(), cb = b.canonical();
        return ca.half_counts == cb.half_counts && ca.arcs == cb.arcs && ca.free_circles == cb.free_circles;
    }
};

struct TangleDiagram {
    std::vector<int> half_counts{0};
    std::vector<Crossing> crossings;
    std::vector<Arc> arcs;
    int free_circles = 0;

    std::size_t boundary_count() const { return half_counts.size(); }
    std::string signature() const { return signature_string(half_counts); }

    TangleDiagram canonical() const {
        TangleDiagram c = *this;
        for (auto& [a, b] : c.arcs)
            if (b < a) std::swap(a, b);
        std::sort(c.arcs.begin(), c.arcs.end());
        return c;
    }
    friend bool operator==(const TangleDiagram& a, const TangleDiagram& b) {
        const auto ca = a.canonical(), cb = b.canonical();
        return ca.half_counts == cb.half_counts && ca.crossings == cb.crossings && ca.arcs == cb.arcs &&
               ca.free_circles == cb.free_circles;
    }
};

inline TangleDiagram to_tangle(const PlanarDiagram& p) { return {p.half_counts, {}, p.arcs, p.free_circles}; }

inline PlanarDiagram to_planar(const TangleDiagram& t) {
    if (!t.crossings.empty()) throw DiagramError("diagram has crossings; it is not a planar diagram");
    return {t.half_counts, t.arcs, t.free_circles};
}

// ---------------------------------------------------------------------------
// Validation

struct Violation {
    enum class Kind { BadSignature, OutOfRange, Dangling, Reused, DegenerateArc, Orientation, Genus };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "\n";
            s += v.message;
        }
        return s;
    }
};

namespace detail {

inline bool endpoint_in_range(const TangleDiagram& t, const Endpoint& e) {
    if (e.is_boundary()) {
        if (e.index < 0 || e.index >= static_cast<int>(t.boundary_count())) return false;
        return e.slot >= 1 && e.slot <= 2 * t.half_counts[static_cast<std::size_t>(e.index)];
    }
    return e.index >= 0 && e.index < static_cast<int>(t.crossings.size()) && e.slot >= 0 && e.slot <= 3;
}

/// Partner of every endpoint along its arc. Assumes a well-formed diagram.
inline std::map<Endpoint, Endpoint> arc_partners(const TangleDiagram& t) {
    std::map<Endpoint, Endpoint> m;
    for (const auto& [a, b] : t.arcs) {
        m[a] = b;
        m[b] = a;
    }
    return m;
}

inline RotationSystem rotation_system(const TangleDiagram& t) {
    // Vertex ids: boundary points first, then crossings.
    std::vector<std::size_t> offset(t.boundary_count() + 1, 0);
    for (std::size_t i = 0; i < t.boundary_count(); ++i)
        offset[i + 1] = offset[i] + static_cast<std::size_t>(2 * t.half_counts[i]);
    const std::size_t point_total = offset.back();
    auto point_vertex = [&](int i, int p) { return offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(p - 1); };
    auto crossing_vertex = [&](int c) { return point_total + static_cast<std::size_t>(c); };

    RotationSystem rs;
    rs.vertex_count = point_total + t.crossings.size();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> succ(point_total, none), pred(point_total, none), arc_dart(point_total, none);
    std::vector<std::array<std::size_t, 4>> port_dart(t.crossings.size(), {none, none, none, none});

    auto new_edge = [&](std::size_t from, std::size_t to) {
        const std::size_t d = rs.vertex_of.size();
        rs.vertex_of.push_back(from);
        rs.vertex_of.push_back(to);
        return d;
    };
    for (std::size_t i = 0; i < t.boundary_count(); ++i) {
        const int size = 2 * t.half_counts[i];
        for (int k = 1; k <= size; ++k) {
            const int next = k % size + 1;
            const std::size_t d = new_edge(point_vertex(static_cast<int>(i), k), point_vertex(static_cast<int>(i), next));
            succ[point_vertex(static_cast<int>(i), k)] = d;
            pred[point_vertex(static_cast<int>(i), next)] = d + 1;
        }
    }
    auto attach = [&](const Endpoint& e, std::size_t dart) {
        if (e.is_boundary()) arc_dart[point_vertex(e.index, e.slot)] = dart;
        else port_dart[static_cast<std::size_t>(e.index)][static_cast<std::size_t>(e.slot)] = dart;
    };
    auto vertex_of_endpoint = [&](const Endpoint& e) {
        return e.is_boundary() ? point_vertex(e.index, e.slot) : crossing_vertex(e.index);
    };
    for (const auto& [a, b] : t.arcs) {
        const std::size_t d = new_edge(vertex_of_endpoint(a), vertex_of_endpoint(b));
        attach(a, d);
        attach(b, d + 1);
    }
    rs.next_ccw.assign(rs.vertex_of.size(), none);
    auto cycle = [&](std::initializer_list<std::size_t> darts) {
        std::vector<std::size_t> v(darts);
        for (std::size_t k = 0; k < v.size(); ++k) rs.next_ccw[v[k]] = v[(k + 1) % v.size()];
    };
    for (std::size_t i = 0; i < t.boundary_count(); ++i) {
        for (int k = 1; k <= 2 * t.half_counts[i]; ++k) {
            const std::size_t v = point_vertex(static_cast<int>(i), k);
            // Arcs leave inner discs outward and the outer disc inward.
            if (i == 0) cycle({succ[v], arc_dart[v], pred[v]});
            else cycle({arc_dart[v], succ[v], pred[v]});
        }
    }
    for (const auto& ports : port_dart) cycle({ports[0], ports[1], ports[2], ports[3]});
    return rs;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Strands and orientation

/// A maximal strand: a path between two boundary points or a closed loop,
/// listed as the sequence of crossing passes it makes in traversal order.
struct StrandComponent {
    struct Pass {
        int crossing;
        int strand;    // 0 for (0-2), 1 for (1-3)
        bool forward;  // traversal goes from the lower port to the higher one
    };
    bool closed = false;
    std::vector<Endpoint> ends;  // both boundary ends when open
    std::vector<Pass> passes;
};

/// Traces all maximal strands of a well-formed diagram. Arcs joining two
/// boundary points form crossing-free open strands. Free circles are not listed.
inline std::vector<StrandComponent> strand_components(const TangleDiagram& t) {
    const auto partner = detail::arc_partners(t);
    std::set<std::pair<int, int>> used;  // (crossing, strand)
    std::vector<StrandComponent> out;
    auto walk_from = [&](Endpoint start_port_or_point, StrandComponent& comp) {
        // `cur` is the endpoint we are leaving along an arc.
        Endpoint cur = start_port_or_point;
        while (true) {
            const Endpoint nxt = partner.at(cur);
            if (nxt.is_boundary()) {
                comp.ends.push_back(nxt);
                return;
            }
            const int strand = nxt.slot % 2;
            if (used.count({nxt.index, strand})) {
                comp.closed = true;
                return;
            }
            used.insert({nxt.index, strand});
            const int exit_port = (nxt.slot + 2) % 4;
            comp.passes.push_back({nxt.index, strand, nxt.slot < exit_port});
            cur = Endpoint::port(nxt.index, exit_port);
        }
    };
    std::set<Endpoint> seen_ends;
    for (std::size_t i = 0; i < t.boundary_count(); ++i) {
        for (int p = 1; p <= 2 * t.half_counts[i]; ++p) {
            const Endpoint e = Endpoint::boundary(static_cast<int>(i), p);
            if (seen_ends.count(e)) continue;
            StrandComponent comp;
            comp.ends.push_back(e);
            walk_from(e, comp);
            for (const auto& x : comp.ends) seen_ends.insert(x);
            out.push_back(std::move(comp));
        }
    }
    for (std::size_t c = 0; c < t.crossings.size(); ++c) {
        for (int strand = 0; strand < 2; ++strand) {
            if (used.count({static_cast<int>(c), strand})) continue;
            StrandComponent comp;
            used.insert({static_cast<int>(c), strand});
            comp.passes.push_back({static_cast<int>(c), strand, true});
            walk_from(Endpoint::port(static_cast<int>(c), strand + 2), comp);
            comp.closed = true;
            out.push_back(std::move(comp));
        }
    }
    return out;
}

/// Relative orientation of a component: +1 if every set direction agrees with
/// traversal, -1 if every one disagrees, 0 if none is set. Throws on conflict.
inline int component_orientation(const TangleDiagram& t, const StrandComponent& comp) {
    int verdict = 0;
    for (const auto& pass : comp.passes) {
        const StrandDir d = t.crossings[static_cast<std::size_t>(pass.crossing)].dir(pass.strand);
        if (d == StrandDir::Unset) continue;
        const int rel = ((d == StrandDir::Forward) == pass.forward) ? 1 : -1;
        if (verdict != 0 && verdict != rel)
            throw DiagramError("inconsistent orientation along the strand through crossing " +
                               std::to_string(pass.crossing));
        verdict = rel;
    }
    return verdict;
}

/// Fills in every unset strand direction. Components that already carry a
/// direction propagate it; for the others `choose(crossing, strand)` picks the
/// traversal sense (true = forward) at the component's first pass.
inline TangleDiagram orient_all(TangleDiagram t, const std::function<bool(int, int)>& choose) {
    for (const auto& comp : strand_components(t)) {
        if (comp.passes.empty()) continue;
        int rel = component_orientation(t, comp);
        if (rel == 0) {
            const auto& first = comp.passes.front();
            const bool fwd = choose(first.crossing, first.strand);
            rel = (fwd == first.forward) ? 1 : -1;
        }
        for (const auto& pass : comp.passes) {
            const bool fwd = (rel == 1) == pass.forward;
            t.crossings[static_cast<std::size_t>(pass.crossing)].dir(pass.strand) =
                fwd ? StrandDir::Forward : StrandDir::Backward;
        }
    }
    return t;
}

/// Propagates declared directions along strands; throws if a strand through a
/// crossing has no declared direction.
inline TangleDiagram propagate_orientation(const TangleDiagram& t) {
    return orient_all(t, [](int c, int) -> bool {
        throw DiagramError("missing orientation on the strand through crossing " + std::to_string(c));
    });
}

// ---------------------------------------------------------------------------
// Validation

inline ValidationReport validate(const TangleDiagram& t, bool strict) {
    ValidationReport report;
    auto add = [&](Violation::Kind k, std::string msg) { report.violations.push_back({k, std::move(msg)}); };
    if (t.half_counts.empty()) {
        add(Violation::Kind::BadSignature, "no boundaries declared");
        return report;
    }
    for (std::size_t i = 0; i < t.half_counts.size(); ++i)
        if (t.half_counts[i] < 0) add(Violation::Kind::BadSignature, "negative half-count on boundary " + std::to_string(i));
    if (t.free_circles < 0) add(Violation::Kind::BadSignature, "negative free circle count");
    if (!report.ok()) return report;

    std::map<Endpoint, int> uses;
    for (const auto& [a, b] : t.arcs) {
        if (a == b) add(Violation::Kind::DegenerateArc, "arc " + a.to_string() + "-" + b.to_string() + " joins a point to itself");
        for (const auto& e : {a, b}) {
            if (!detail::endpoint_in_range(t, e)) {
                add(Violation::Kind::OutOfRange, "endpoint " + e.to_string() + " is out of range");
                continue;
            }
            if (++uses[e] == 2) add(Violation::Kind::Reused, "endpoint " + e.to_string() + " is used by more than one arc");
        }
    }
    for (std::size_t i = 0; i < t.boundary_count(); ++i)
        for (int p = 1; p <= 2 * t.half_counts[i]; ++p)
            if (!uses.count(Endpoint::boundary(static_cast<int>(i), p)))
                add(Violation::Kind::Dangling, "boundary point " + Endpoint::boundary(static_cast<int>(i), p).to_string() + " is not on any arc");
    for (std::size_t c = 0; c < t.crossings.size(); ++c)
        for (int p = 0; p < 4; ++p)
            if (!uses.count(Endpoint::port(static_cast<int>(c), p)))
                add(Violation::Kind::Dangling, "crossing port " + Endpoint::port(static_cast<int>(c), p).to_string() + " is not on any arc");
    if (!report.ok()) return report;

    try {
        for (const auto& comp : strand_components(t)) component_orientation(t, comp);
    } catch (const DiagramError& e) {
        add(Violation::Kind::Orientation, e.what());
    }

    if (strict) {
        const auto rs = detail::rotation_system(t);
        const int genus = rs.total_genus();
        if (genus != 0) add(Violation::Kind::Genus, "diagram is not planar: combinatorial map has genus " + std::to_string(genus));
        // Every disc interior must be a face bounded only by its own boundary segments.
        std::size_t faces = 0;
        const auto label = rs.face_labels(&faces);
        std::vector<std::size_t> face_size(faces, 0);
        for (int f : label) ++face_size[static_cast<std::size_t>(f)];
        std::size_t dart = 0;
        for (std::size_t i = 0; i < t.boundary_count(); ++i) {
            const auto size = static_cast<std::size_t>(2 * t.half_counts[i]);
            if (size == 0) continue;
            // Segment darts come in (succ, pred) pairs; the disc face of an inner
            // disc runs along pred darts, that of the outer disc along succ darts.
            const std::size_t probe = (i == 0) ? dart : dart + 1;
            if (face_size[static_cast<std::size_t>(label[probe])] != size)
                add(Violation::Kind::Genus, "interior of disc " + std::to_string(i) + " is crossed by an arc");
            dart += 2 * size;
        }
    }
    return report;
}

inline ValidationReport validate(const PlanarDiagram& p, bool strict) { return validate(to_tangle(p), strict); }

inline void require_valid(const TangleDiagram& t, bool strict = false) {
    const auto report = validate(t, strict);
    if (!report.ok()) throw DiagramError(report.summary());
}
inline void require_valid(const PlanarDiagram& p, bool strict = false) { require_valid(to_tangle(p), strict); }

// ---------------------------------------------------------------------------
// Composition

struct Composition {
    TangleDiagram diagram;
    /// Least glued point of each closed chain created by the gluing, in the
    /// order those chains were appended to the free circles.
    std::vector<int> closed_chain_points;
};

/// R ∘_i T: glues the outer boundary of T into inner boundary i of R, point k
/// to point k with basepoints identified. The result has boundaries
/// (R_0; R_1, ..., R_{i-1}, T_1, ..., T_m, R_{i+1}, ...) and crossings of R
/// followed by those of T. Free circles: R's, then T's, then closed chains.
inline Composition compose_with_trace(const TangleDiagram& r, int i, const TangleDiagram& t) {
    if (i < 1 || i >= static_cast<int>(r.boundary_count()))
        throw SignatureMismatch("cannot glue into boundary " + std::to_string(i) + " of a diagram with signature " + r.signature());
    if (t.half_counts[0] != r.half_counts[static_cast<std::size_t>(i)])
        throw SignatureMismatch("cannot glue a diagram with signature " + t.signature() + " into boundary " +
                                std::to_string(i) + " of a diagram with signature " + r.signature());
    require_valid(r);
    require_valid(t);

    const int mt = static_cast<int>(t.boundary_count()) - 1;
    const int cr = static_cast<int>(r.crossings.size());
    Composition out;
    auto& d = out.diagram;
    d.half_counts.assign(r.half_counts.begin(), r.half_counts.begin() + i);
    d.half_counts.insert(d.half_counts.end(), t.half_counts.begin() + 1, t.half_counts.end());
    d.half_counts.insert(d.half_counts.end(), r.half_counts.begin() + i + 1, r.half_counts.end());
    d.crossings = r.crossings;
    d.crossings.insert(d.crossings.end(), t.crossings.begin(), t.crossings.end());
    d.free_circles = r.free_circles + t.free_circles;

    enum Side { R = 0, T = 1 };
    const auto pr = detail::arc_partners(r), pt = detail::arc_partners(t);
    auto glued = [&](Side s, const Endpoint& e) {
        return e.is_boundary() && ((s == R && e.index == i) || (s == T && e.index == 0));
    };
    auto map_out = [&](Side s, const Endpoint& e) -> Endpoint {
        if (s == R) {
            if (e.is_port()) return e;
            return Endpoint::boundary(e.index < i ? e.index : e.index + mt - 1, e.slot);
        }
        if (e.is_port()) return Endpoint::port(e.index + cr, e.slot);
        return Endpoint::boundary(e.index + i - 1, e.slot);
    };
    const int glue_points = 2 * r.half_counts[static_cast<std::size_t>(i)];
    std::vector<bool> glue_seen(static_cast<std::size_t>(glue_points + 1), false);
    // Follow arcs from a non-glued endpoint until reaching another non-glued one.
    auto walk = [&](Side s, Endpoint e) -> std::pair<Side, Endpoint> {
        Endpoint b = (s == R ? pr : pt).at(e);
        while (glued(s, b)) {
            glue_seen[static_cast<std::size_t>(b.slot)] = true;
            s = (s == R) ? T : R;
            const Endpoint g = (s == R) ? Endpoint::boundary(i, b.slot) : Endpoint::boundary(0, b.slot);
            b = (s == R ? pr : pt).at(g);
        }
        return {s, b};
    };
    std::set<std::pair<int, Endpoint>> emitted;
    for (Side s : {R, T}) {
        const auto& arcs = (s == R) ? r.arcs : t.arcs;
        for (const auto& [a, b] : arcs) {
            for (const Endpoint& start : {a, b}) {
                if (glued(s, start) || emitted.count({s, start})) continue;
                auto [s2, end] = walk(s, start);
                emitted.insert({s, start});
                emitted.insert({s2, end});
                d.arcs.emplace_back(map_out(s, start), map_out(s2, end));
                break;
            }
        }
    }
    for (int k = 1; k <= glue_points; ++k) {
        if (glue_seen[static_cast<std::size_t>(k)]) continue;
        // Closed chain through glued points only.
        glue_seen[static_cast<std::size_t>(k)] = true;
        Endpoint cur = pr.at(Endpoint::boundary(i, k));
        Side s = R;
        while (true) {
            glue_seen[static_cast<std::size_t>(cur.slot)] = true;
            s = (s == R) ? T : R;
            const Endpoint g = (s == R) ? Endpoint::boundary(i, cur.slot) : Endpoint::boundary(0, cur.slot);
            if (s == R && cur.slot == k) break;
            cur = (s == R ? pr : pt).at(g);
        }
        ++d.free_circles;
        out.closed_chain_points.push_back(k);
    }
    return out;
}

inline TangleDiagram compose(const TangleDiagram& r, int i, const TangleDiagram& t) {
    return compose_with_trace(r, i, t).diagram;
}

inline PlanarDiagram compose(const PlanarDiagram& r, int i, const PlanarDiagram& t) {
    return to_planar(compose(to_tangle(r), i, to_tangle(t)));
}

/// Removes inner boundary i, which must carry no points.
inline TangleDiagram drop_trivial_boundary(const TangleDiagram& t, int i) {
    if (i < 1 || i >= static_cast<int>(t.boundary_count()))
        throw DiagramError("drop_trivial_boundary: boundary index must be between 1 and m");
    if (t.half_counts[static_cast<std::size_t>(i)] != 0)
        throw DiagramError("drop_trivial_boundary: boundary " + std::to_string(i) + " meets the diagram");
    TangleDiagram r = t;
    r.half_counts.erase(r.half_counts.begin() + i);
    for (auto& [a, b] : r.arcs)
        for (Endpoint* e : {&a, &b})
            if (e->is_boundary() && e->index > i) --e->index;
    return r;
}

inline PlanarDiagram drop_trivial_boundary(const PlanarDiagram& p, int i) {
    return to_planar(drop_trivial_boundary(to_tangle(p), i));
}

/// Appends an empty inner disc.
inline PlanarDiagram add_trivial_boundary(PlanarDiagram p) {
    p.half_counts.push_back(0);
    return p;
}

// ---------------------------------------------------------------------------
// Standard diagrams

/// Annular diagram (n; n) joining point k of D_1 to point k of D_0.
inline PlanarDiagram identity_diagram(int n) {
    PlanarDiagram p;
    p.half_counts = {n, n};
    for (int k = 1; k <= 2 * n; ++k) p.arcs.emplace_back(Endpoint::boundary(1, k), Endpoint::boundary(0, k));
    return p;
}

/// Signature (0;1): a single arc on the inner boundary.
inline PlanarDiagram cup_diagram() {
    PlanarDiagram p;
    p.half_counts = {0, 1};
    p.arcs.emplace_back(Endpoint::boundary(1, 1), Endpoint::boundary(1, 2));
    return p;
}

/// Signature (1): a single arc on the outer boundary.
inline PlanarDiagram cap_diagram() {
    PlanarDiagram p;
    p.half_counts = {1};
    p.arcs.emplace_back(Endpoint::boundary(0, 1), Endpoint::boundary(0, 2));
    return p;
}

/// Signature (n): the arcs of a matching on the outer boundary.
inline PlanarDiagram matching_diagram(const NoncrossingMatching& m) {
    PlanarDiagram p;
    p.half_counts = {m.half_count()};
    for (auto [a, b] : m.pairs()) p.arcs.emplace_back(Endpoint::boundary(0, a), Endpoint::boundary(0, b));
    return p;
}

/// Signature (0; n, n): point k of D_1 joined to point 2n+1-k of D_2.
inline PlanarDiagram pairing_diagram(int n) {
    PlanarDiagram p;
    p.half_counts = {0, n, n};
    for (int k = 1; k <= 2 * n; ++k) p.arcs.emplace_back(Endpoint::boundary(1, k), Endpoint::boundary(2, 2 * n + 1 - k));
    return p;
}

/// Annular (n; n) Temperley-Lieb generator e_j: cup on D_1 at (j, j+1), cap on
/// D_0 at (j, j+1), all other points radial.
inline PlanarDiagram annular_tl_generator(int n, int j) {
    if (j < 1 || j >= 2 * n) throw DiagramError("TL generator index out of range");
    PlanarDiagram p;
    p.half_counts = {n, n};
    p.arcs.emplace_back(Endpoint::boundary(1, j), Endpoint::boundary(1, j + 1));
    p.arcs.emplace_back(Endpoint::boundary(0, j), Endpoint::boundary(0, j + 1));
    for (int k = 1; k <= 2 * n; ++k)
        if (k != j && k != j + 1) p.arcs.emplace_back(Endpoint::boundary(1, k), Endpoint::boundary(0, k));
    return p;
}

}  // namespace cleaved
