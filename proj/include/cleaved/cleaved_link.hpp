#pragma once

// Cleaved links: (inside matching, outside matching, one sign per circle).
// They form the basis of the module I_{2n}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"

namespace cleaved {

enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct CleavedLink {
    NoncrossingMatching inside;
    NoncrossingMatching outside;
    std::vector<Sign> decorations;  // indexed by trace_cycles(inside, outside) order

    int half_count() const { return inside.half_count(); }

    static CleavedLink make(NoncrossingMatching in, NoncrossingMatching out, std::vector<Sign> dec) {
        if (in.half_count() != out.half_count())
            throw std::invalid_argument("cleaved link: inside and outside matchings differ in size");
        const auto cycles = trace_cycles(in, out);
        if (cycles.count() != dec.size())
            throw std::invalid_argument("cleaved link: decoration count " + std::to_string(dec.size()) +
                                        " does not match circle count " + std::to_string(cycles.count()));
        return {std::move(in), std::move(out), std::move(dec)};
    }

    std::string decoration_string() const {
        std::string s;
        for (Sign d : decorations) s += sign_char(d);
        return s;
    }

    /// "in=1-4,2-3; out=1-2,3-4; dec=+"
    std::string to_string() const {
        return "in=" + inside.to_string() + "; out=" + outside.to_string() + "; dec=" + decoration_string();
    }

    friend bool operator==(const CleavedLink&, const CleavedLink&) = default;
};

/// Canonical enumeration of cleaved{n} with O(1) index lookup.
///
/// Order: by inside matching, then outside matching, then decoration vector
/// read as a binary number (first circle most significant, + = 0).
class CleavedBasis {
public:
    explicit CleavedBasis(int n) : n_(n) {
        const auto& ms = enumerate_noncrossing(n);
        const std::size_t c = ms.size();
        block_offset_.resize(c * c);
        block_cycles_.resize(c * c);
        for (std::size_t i = 0; i < c; ++i) {
            for (std::size_t o = 0; o < c; ++o) {
                const auto cycles = trace_cycles(ms[i], ms[o]);
                const std::size_t k = cycles.count();
                block_offset_[i * c + o] = links_.size();
                block_cycles_[i * c + o] = static_cast<int>(k);
                for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
                    std::vector<Sign> dec(k);
                    for (std::size_t j = 0; j < k; ++j)
                        dec[j] = ((bits >> (k - 1 - j)) & 1u) ? Sign::Minus : Sign::Plus;
                    links_.push_back({ms[i], ms[o], std::move(dec)});
                }
            }
        }
    }

    int half_count() const { return n_; }
    std::size_t size() const { return links_.size(); }
    const CleavedLink& operator[](std::size_t idx) const { return links_[idx]; }
    const std::vector<CleavedLink>& links() const { return links_; }

    std::size_t block_offset(std::size_t inside_idx, std::size_t outside_idx) const {
        return block_offset_[inside_idx * matchings() + outside_idx];
    }
    int block_cycles(std::size_t inside_idx, std::size_t outside_idx) const {
        return block_cycles_[inside_idx * matchings() + outside_idx];
    }

    std::size_t index_of(const CleavedLink& l) const {
        if (l.half_count() != n_) throw std::invalid_argument("cleaved link has the wrong half-count");
        const std::size_t base = block_offset(matching_index(l.inside), matching_index(l.outside));
        std::uint64_t bits = 0;
        for (Sign d : l.decorations) bits = (bits << 1u) | static_cast<std::uint64_t>(d);
        return base + bits;
    }

private:
    std::size_t matchings() const { return enumerate_noncrossing(n_).size(); }

    int n_;
    std::vector<CleavedLink> links_;
    std::vector<std::size_t> block_offset_;
    std::vector<int> block_cycles_;
};

/// Shared, cached basis for cleaved{n}.
inline const CleavedBasis& cleaved_basis(int n) {
    if (n < 0) throw std::invalid_argument("cleaved basis: negative half-count");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CleavedBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<CleavedBasis>(n);
    return *slot;
}

inline const std::vector<CleavedLink>& enumerate_cleaved(int n) { return cleaved_basis(n).links(); }

/// dim I_{2n} by direct count over matching pairs (independent of the basis table).
inline std::uint64_t module_dimension(int n) {
    const auto& ms = enumerate_noncrossing(n);
    std::uint64_t total = 0;
    for (const auto& a : ms)
        for (const auto& b : ms) total += std::uint64_t{1} << trace_cycles(a, b).count();
    return total;
}

inline CleavedLink conjugate_link(const CleavedLink& l) {
    CleavedLink r = l;
    for (auto& d : r.decorations) d = flip(d);
    return r;
}

/// Reflection k -> 2n+1-k of the boundary points.
inline std::vector<int> reflection(int n) {
    std::vector<int> perm(static_cast<std::size_t>(2 * n + 1), 0);
    for (int k = 1; k <= 2 * n; ++k) perm[static_cast<std::size_t>(k)] = 2 * n + 1 - k;
    return perm;
}

/// The basis element pairing to 1 with `l` under the annular pairing diagram
/// (point k of the first disc joined to point 2n+1-k of the second): inside and
/// outside swap, points are reflected, and each circle keeps its sign.
inline CleavedLink dual_link(const CleavedLink& l) {
    const int n = l.half_count();
    const auto perm = reflection(n);
    CleavedLink r;
    r.inside = l.outside.relabeled(perm);
    r.outside = l.inside.relabeled(perm);
    const auto old_cycles = trace_cycles(l.inside, l.outside);
    const auto new_cycles = trace_cycles(r.inside, r.outside);
    r.decorations.assign(new_cycles.count(), Sign::Plus);
    for (std::size_t c = 0; c < old_cycles.count(); ++c) {
        const int p = old_cycles.cycles[c].front();
        const auto target = new_cycles.cycle_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
        r.decorations[static_cast<std::size_t>(target)] = l.decorations[c];
    }
    return r;
}

// Named generators of I_0, I_2 and I_4.
//
// For n = 2 write a = 1-2,3-4 and b = 1-4,2-3. The types are
//   C = (in a, out a), D = (in a, out b), A = (in b, out a), B = (in b, out b).
// B_{xy}: x is the sign of the circle through point 1, y of the circle through 2.
// C_{xy}: x is the sign of the circle through point 3, y of the circle through 1;
// this is the reverse of canonical cycle order, and it is the only assignment
// that reproduces the published TL generator matrices.
// With this convention the canonical enumeration of cleaved{2} is exactly
//   C++, C-+, C+-, C--, D+, D-, A+, A-, B++, B+-, B-+, B--.
inline std::optional<std::string> named_label(const CleavedLink& l) {
    const int n = l.half_count();
    if (n == 0) return std::string("I_0");
    if (n == 1) return std::string("I_") + sign_char(l.decorations.at(0));
    if (n != 2) return std::nullopt;
    const bool in_a = l.inside.partner(1) == 2;
    const bool out_a = l.outside.partner(1) == 2;
    const auto& d = l.decorations;
    if (in_a && out_a) return std::string("C_{") + sign_char(d[1]) + sign_char(d[0]) + "}";
    if (in_a && !out_a) return std::string("D_") + sign_char(d[0]);
    if (!in_a && out_a) return std::string("A_") + sign_char(d[0]);
    return std::string("B_{") + sign_char(d[0]) + sign_char(d[1]) + "}";
}

/// Inverse of named_label for n <= 2; accepts "C_{-+}", "C-+", "A_+", "I_-", ...
inline CleavedLink link_from_label(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (ch != '_' && ch != '{' && ch != '}') s += ch;
    auto sign = [&](char ch) {
        if (ch == '+') return Sign::Plus;
        if (ch == '-') return Sign::Minus;
        throw std::invalid_argument("bad sign in label: " + raw);
    };
    if (s == "I0") return CleavedLink::make({}, {}, {});
    const auto a = NoncrossingMatching::parse("1-2,3-4");
    const auto b = NoncrossingMatching::parse("1-4,2-3");
    if (s.size() == 2 && s[0] == 'I') {
        const auto m = NoncrossingMatching::parse("1-2");
        return CleavedLink::make(m, m, {sign(s[1])});
    }
    if (s.size() == 2 && s[0] == 'A') return CleavedLink::make(b, a, {sign(s[1])});
    if (s.size() == 2 && s[0] == 'D') return CleavedLink::make(a, b, {sign(s[1])});
    if (s.size() == 3 && s[0] == 'B') return CleavedLink::make(b, b, {sign(s[1]), sign(s[2])});
    if (s.size() == 3 && s[0] == 'C') return CleavedLink::make(a, a, {sign(s[2]), sign(s[1])});
    throw std::invalid_argument("unknown cleaved link label: " + raw);
}

}  // namespace cleaved
