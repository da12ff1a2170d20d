#pragma once

// Braid words on 2n strands, their annular tangle diagrams and representation
// matrices.
//
// Layout: braids run down the page, strand position k counts from the left.
// In the annulus the inner boundary D_1 is the top of the braid and the outer
// boundary D_0 the bottom; point k of either boundary is strand position k.
// A * B glues B into the inner disc of A, i.e. stacks B on top of A. To make
// braid_rep(w1 w2) = braid_rep(w1) * braid_rep(w2), the last letter of a word
// sits at the top, next to the inner boundary.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "matrix.hpp"
#include "tangle.hpp"

namespace cleaved {

class BraidError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BraidLetter {
    int position = 1;  // crossing between strands position and position+1
    int sign = 1;      // +1 for s_i, -1 for s_i^-1
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
    int strands = 2;
    std::vector<BraidLetter> letters;

    static BraidWord identity(int strands) { return make(strands, {}); }

    static BraidWord make(int strands, std::vector<BraidLetter> letters) {
        if (strands < 0 || strands % 2 != 0) throw BraidError("strand count must be even, got " + std::to_string(strands));
        for (const auto& l : letters) {
            if (l.position < 1 || l.position >= strands)
                throw BraidError("generator s" + std::to_string(l.position) + " out of range for " +
                                 std::to_string(strands) + " strands");
            if (l.sign != 1 && l.sign != -1) throw BraidError("letter sign must be +1 or -1");
        }
        return {strands, std::move(letters)};
    }

    /// Parses whitespace-separated letters `s<i>`, `s<i>^-1` or `s<i>^{-1}`.
    /// The empty string is the identity.
    static BraidWord parse(int strands, std::string_view text) {
        std::vector<BraidLetter> letters;
        std::size_t k = 0;
        auto fail = [&](const std::string& what) {
            throw BraidError("braid word column " + std::to_string(k + 1) + ": " + what);
        };
        while (k < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[k])) || text[k] == '*' || text[k] == '.') {
                ++k;
                continue;
            }
            if (text[k] != 's' && text[k] != 'S') fail("expected 's<i>'");
            ++k;
            int pos = 0;
            const auto [ptr, ec] = std::from_chars(text.data() + k, text.data() + text.size(), pos);
            if (ec != std::errc()) fail("expected a generator index");
            k = static_cast<std::size_t>(ptr - text.data());
            int sign = 1;
            if (k < text.size() && text[k] == '^') {
                ++k;
                const bool braced = k < text.size() && text[k] == '{';
                if (braced) ++k;
                if (text.substr(k, 2) != "-1") fail("only the exponent -1 is supported");
                k += 2;
                if (braced) {
                    if (k >= text.size() || text[k] != '}') fail("missing '}'");
                    ++k;
                }
                sign = -1;
            }
            letters.push_back({pos, sign});
        }
        return make(strands, std::move(letters));
    }

    BraidWord inverse() const {
        BraidWord w{strands, {}};
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->position, -it->sign});
        return w;
    }

    BraidWord operator*(const BraidWord& o) const {
        if (o.strands != strands) throw BraidError("cannot multiply braids with different strand counts");
        BraidWord w = *this;
        w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
        return w;
    }

    std::string to_string() const {
        if (letters.empty()) return "e";
        std::string s;
        for (const auto& l : letters) {
            if (!s.empty()) s += ' ';
            s += 's' + std::to_string(l.position);
            if (l.sign < 0) s += "^-1";
        }
        return s;
    }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

namespace detail {

/// Stacks the crossings of `w` between a top row and a bottom row of
/// endpoints. Ports: 0 top-left, 1 bottom-left, 2 bottom-right, 3 top-right;
/// strands run downward. Letters are laid out from the top down in the order
/// given by `top_first`.
inline TangleDiagram stack_braid(const std::vector<BraidLetter>& top_first, const std::vector<Endpoint>& top,
                                 const std::vector<Endpoint>& bottom, std::vector<int> half_counts) {
    TangleDiagram t;
    t.half_counts = std::move(half_counts);
    std::vector<Endpoint> cur = top;
    for (const auto& l : top_first) {
        const int c = static_cast<int>(t.crossings.size());
        // Positive letter: the strand from top-left to bottom-right passes under.
        t.crossings.push_back({l.sign < 0, StrandDir::Forward, StrandDir::Backward});
        const auto j = static_cast<std::size_t>(l.position - 1);
        t.arcs.emplace_back(cur[j], Endpoint::port(c, 0));
        t.arcs.emplace_back(cur[j + 1], Endpoint::port(c, 3));
        cur[j] = Endpoint::port(c, 1);
        cur[j + 1] = Endpoint::port(c, 2);
    }
    for (std::size_t k = 0; k < cur.size(); ++k) t.arcs.emplace_back(cur[k], bottom[k]);
    return t;
}

}  // namespace detail

/// Annular tangle (n; n) of a braid on 2n strands, all strands oriented down.
/// The last letter sits at the top, next to the inner boundary.
inline TangleDiagram braid_to_tangle(const BraidWord& w) {
    if (w.strands % 2 != 0) throw BraidError("strand count must be even");
    const int n = w.strands / 2;
    std::vector<Endpoint> top, bottom;
    for (int k = 1; k <= w.strands; ++k) {
        top.push_back(Endpoint::boundary(1, k));
        bottom.push_back(Endpoint::boundary(0, k));
    }
    const std::vector<BraidLetter> top_first(w.letters.rbegin(), w.letters.rend());
    return detail::stack_braid(top_first, top, bottom, {n, n});
}

/// The braid drawn inside a single disc with signature (s) for s strands:
/// bottom position k is point k, top position k is point 2s+1-k (counterclockwise
/// from the bottom-left corner). The first letter sits at the top.
inline TangleDiagram braid_in_disc(int strands, const std::vector<BraidLetter>& letters) {
    for (const auto& l : letters)
        if (l.position < 1 || l.position >= strands) throw BraidError("generator index out of range");
    std::vector<Endpoint> top, bottom;
    for (int k = 1; k <= strands; ++k) {
        bottom.push_back(Endpoint::boundary(0, k));
        top.push_back(Endpoint::boundary(0, 2 * strands + 1 - k));
    }
    return detail::stack_braid(letters, top, bottom, {strands});
}

/// Closed diagram of the braid closure (strands returned around the right).
inline TangleDiagram braid_closure(const BraidWord& w) {
    const int s = w.strands;
    const TangleDiagram disc = braid_in_disc(s, w.letters);
    TangleDiagram outer;
    outer.half_counts = {0, s};
    for (int k = 1; k <= s; ++k) outer.arcs.emplace_back(Endpoint::boundary(1, k), Endpoint::boundary(1, 2 * s + 1 - k));
    return compose(outer, 1, disc);
}

inline PartitionMatrix braid_rep(const BraidWord& w, unsigned workers = worker_count()) {
    return partition_tangle(braid_to_tangle(w), workers);
}

}  // namespace cleaved
