#pragma once

// Face tracing on a combinatorial map given by a rotation system.

#include <cstddef>
#include <numeric>
#include <vector>

namespace cleaved {

/// Darts come in twin pairs (2k, 2k+1), one pair per edge. `next_ccw[d]` is
/// the dart following d counterclockwise around d's vertex, and `vertex_of[d]`
/// is the vertex d leaves from.
struct RotationSystem {
    std::size_t vertex_count = 0;
    std::vector<std::size_t> next_ccw;
    std::vector<std::size_t> vertex_of;

    std::size_t dart_count() const { return next_ccw.size(); }
    static std::size_t twin(std::size_t d) { return d ^ 1u; }

    /// Next dart along the face that lies clockwise of d at its head.
    std::size_t face_step(std::size_t d) const { return next_ccw[twin(d)]; }

    /// Face index of every dart.
    std::vector<int> face_labels(std::size_t* face_count = nullptr) const {
        std::vector<int> label(dart_count(), -1);
        int faces = 0;
        for (std::size_t d = 0; d < dart_count(); ++d) {
            if (label[d] >= 0) continue;
            std::size_t e = d;
            do {
                label[e] = faces;
                e = face_step(e);
            } while (e != d);
            ++faces;
        }
        if (face_count) *face_count = static_cast<std::size_t>(faces);
        return label;
    }

    /// Sum of genera of the connected components (isolated vertices count as spheres).
    int total_genus() const {
        std::vector<std::size_t> parent(vertex_count);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t d = 0; d < dart_count(); d += 2) parent[find(vertex_of[d])] = find(vertex_of[d + 1]);
        std::size_t components = 0;
        for (std::size_t v = 0; v < vertex_count; ++v)
            if (find(v) == v) ++components;
        std::size_t faces = 0;
        face_labels(&faces);
        // Isolated vertices have no darts and so no traced face; each one is a
        // sphere with one face.
        std::vector<bool> has_dart(vertex_count, false);
        for (std::size_t d = 0; d < dart_count(); ++d) has_dart[vertex_of[d]] = true;
        for (std::size_t v = 0; v < vertex_count; ++v)
            if (!has_dart[v]) ++faces;
        const long long euler = static_cast<long long>(vertex_count) - static_cast<long long>(dart_count() / 2) +
                                static_cast<long long>(faces);
        return static_cast<int>((2 * static_cast<long long>(components) - euler) / 2);
    }
};

}  // namespace cleaved
