#pragma once

// The Temperley-Lieb planar algebra at δ = q + q^{-1}, its inclusion into the
// cleaved-link modules, and exact linear algebra over Z[q^{1/2}, q^{-1/2}].
//
// Ranks are taken over the fraction field. Elimination is fraction-free
// (Bareiss style, every division exact) and pivots on the entry of least
// span; ranks are cross-checked by Gaussian elimination over Q after
// substituting rational values for q^{1/2}.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cleaved_link.hpp"
#include "combinatorics.hpp"
#include "diagram.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "ring.hpp"

namespace cleaved {

using RingVector = std::vector<HalfLaurent>;

/// A dense matrix over the ring with labelled rows and columns.
struct RingMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<RingVector> entries;  // entries[r][c]

    RingMatrix() = default;
    RingMatrix(std::size_t rows, std::size_t cols)
        : row_labels(rows), col_labels(cols), entries(rows, RingVector(cols)) {}

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return col_labels.size(); }
    HalfLaurent& operator()(std::size_t r, std::size_t c) { return entries[r][c]; }
    const HalfLaurent& operator()(std::size_t r, std::size_t c) const { return entries[r][c]; }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.cols() == b.cols() && a.entries == b.entries;
    }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.cols() != b.rows()) throw BasisMismatch("ring matrix product: inner dimensions differ");
        RingMatrix r(a.rows(), b.cols());
        r.row_labels = a.row_labels;
        r.col_labels = b.col_labels;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    RingMatrix scaled(const HalfLaurent& s) const {
        RingMatrix r = *this;
        for (auto& row : r.entries)
            for (auto& x : row) x *= s;
        return r;
    }

    RingVector apply(const RingVector& v) const {
        if (v.size() != cols()) throw BasisMismatch("vector length does not match the matrix");
        RingVector out(rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j)
                if (!entries[i][j].is_zero() && !v[j].is_zero()) out[i] += entries[i][j] * v[j];
        return out;
    }

    RingVector column(std::size_t c) const {
        RingVector v;
        for (const auto& row : entries) v.push_back(row[c]);
        return v;
    }
};

/// Rows of `blocks` stacked top to bottom (all must have the same columns).
inline RingMatrix stack(const std::vector<RingMatrix>& blocks) {
    RingMatrix out;
    for (const auto& b : blocks) {
        if (!out.col_labels.empty() && b.cols() != out.cols()) throw BasisMismatch("stack: column counts differ");
        out.col_labels = b.col_labels;
        out.row_labels.insert(out.row_labels.end(), b.row_labels.begin(), b.row_labels.end());
        out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
    }
    return out;
}

/// Display label of a cleaved link: the named form when one exists.
inline std::string link_label(const CleavedLink& l) {
    if (auto name = named_label(l)) return *name;
    return l.to_string();
}

inline std::vector<std::string> module_labels(int n) {
    std::vector<std::string> out;
    for (const auto& l : enumerate_cleaved(n)) out.push_back(link_label(l));
    return out;
}

inline std::vector<std::string> tl_labels(int n) {
    std::vector<std::string> out;
    for (const auto& m : enumerate_noncrossing(n)) out.push_back(m.to_string());
    return out;
}

/// Dense labelled copy of a partition matrix with one column factor.
inline RingMatrix to_ring_matrix(const PartitionMatrix& z) {
    if (z.column_half_counts().size() != 1) throw BasisMismatch("to_ring_matrix needs a single column factor");
    RingMatrix m(z.rows(), z.cols());
    m.row_labels = module_labels(z.row_half_count());
    m.col_labels = module_labels(z.column_half_counts()[0]);
    for (const auto& [key, v] : z.entries()) m(key.first, key.second) = v;
    return m;
}

// ---------------------------------------------------------------------------
// Temperley-Lieb side

/// Z_P on Temperley-Lieb modules: each inner boundary is filled with a basis
/// matching, closed circles evaluate to q + q^{-1}, and the outer boundary is
/// read off as a matching. Columns follow the tensor order of the inner discs
/// (D_1 most significant).
inline RingMatrix tl_partition(const PlanarDiagram& p) {
    require_valid(p);
    const int m = static_cast<int>(p.boundary_count()) - 1;
    std::vector<const std::vector<NoncrossingMatching>*> inner;
    std::size_t cols = 1;
    for (int i = 1; i <= m; ++i) {
        inner.push_back(&enumerate_noncrossing(p.half_counts[static_cast<std::size_t>(i)]));
        cols *= inner.back()->size();
    }
    const auto& outer = enumerate_noncrossing(p.half_counts[0]);
    RingMatrix out(outer.size(), cols);
    out.row_labels = tl_labels(p.half_counts[0]);
    std::vector<std::string> col_labels(cols);

    std::map<Endpoint, Endpoint> arc;
    for (const auto& [a, b] : p.arcs) {
        arc[a] = b;
        arc[b] = a;
    }
    const HalfLaurent delta = HalfLaurent::loop();
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t rest = col;
        for (int i = m - 1; i >= 0; --i) {
            idx[static_cast<std::size_t>(i)] = rest % inner[static_cast<std::size_t>(i)]->size();
            rest /= inner[static_cast<std::size_t>(i)]->size();
        }
        std::string label;
        for (int i = 0; i < m; ++i)
            label += (i ? " x " : "") + (*inner[static_cast<std::size_t>(i)])[idx[static_cast<std::size_t>(i)]].to_string();
        col_labels[col] = m == 0 ? "1" : label;
        auto fill = [&](const Endpoint& e) {
            const auto& mm = (*inner[static_cast<std::size_t>(e.index - 1)])[idx[static_cast<std::size_t>(e.index - 1)]];
            return Endpoint::boundary(e.index, mm.partner(e.slot));
        };
        std::set<Endpoint> seen;
        std::vector<int> partner(static_cast<std::size_t>(2 * p.half_counts[0] + 1), 0);
        for (int k = 1; k <= 2 * p.half_counts[0]; ++k) {
            const Endpoint start = Endpoint::boundary(0, k);
            if (seen.count(start)) continue;
            Endpoint e = arc.at(start);
            while (e.index != 0) {
                seen.insert(e);
                const Endpoint f = fill(e);
                seen.insert(f);
                e = arc.at(f);
            }
            seen.insert(start);
            seen.insert(e);
            partner[static_cast<std::size_t>(k)] = e.slot;
            partner[static_cast<std::size_t>(e.slot)] = k;
        }
        int circles = p.free_circles;
        for (int i = 1; i <= m; ++i) {
            for (int k = 1; k <= 2 * p.half_counts[static_cast<std::size_t>(i)]; ++k) {
                const Endpoint start = Endpoint::boundary(i, k);
                if (seen.count(start)) continue;
                Endpoint e = start;
                do {
                    seen.insert(e);
                    const Endpoint f = fill(e);
                    seen.insert(f);
                    e = arc.at(f);
                } while (e != start);
                ++circles;
            }
        }
        const auto row = matching_index(NoncrossingMatching::from_partners(std::move(partner)));
        out(row, col) += delta.pow(static_cast<unsigned>(circles));
    }
    out.col_labels = std::move(col_labels);
    return out;
}

/// Columns Z_m(1) for the planar matchings m on 2n points.
inline RingMatrix tl_to_I(int n) {
    const auto& ms = enumerate_noncrossing(n);
    RingMatrix out(module_dimension(n), ms.size());
    out.row_labels = module_labels(n);
    out.col_labels = tl_labels(n);
    for (std::size_t c = 0; c < ms.size(); ++c) {
        const auto z = partition_map(matching_diagram(ms[c]));
        for (const auto& [key, v] : z.entries()) out(key.first, c) = v;
    }
    return out;
}

/// Matrices on I_{2n} of the annular cup-cap generators e_1 .. e_{2n-1}.
inline std::vector<RingMatrix> tl_generator_matrices(int n) {
    if (n < 1) throw std::invalid_argument("tl_generator_matrices needs n >= 1");
    std::vector<RingMatrix> out;
    for (int j = 1; j < 2 * n; ++j) out.push_back(to_ring_matrix(partition_map(annular_tl_generator(n, j))));
    return out;
}

/// The same generators acting on TL_{2n}.
inline std::vector<RingMatrix> tl_generator_actions(int n) {
    std::vector<RingMatrix> out;
    for (int j = 1; j < 2 * n; ++j) out.push_back(tl_partition(annular_tl_generator(n, j)));
    return out;
}

// ---------------------------------------------------------------------------
// Linear algebra

inline bool is_zero_vector(const RingVector& v) {
    return std::all_of(v.begin(), v.end(), [](const HalfLaurent& x) { return x.is_zero(); });
}

inline bool kernel_membership(const RingMatrix& m, const RingVector& v) { return is_zero_vector(m.apply(v)); }

struct Echelon {
    RingMatrix form;                  // fraction-free row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

inline HalfLaurent exact_quotient(const HalfLaurent& a, const HalfLaurent& b) {
    auto r = a.divide_exact(b);
    if (!r) throw std::logic_error("fraction-free elimination: inexact division");
    return *r;
}

/// Fraction-free row echelon form. Pivots are chosen per column as the
/// remaining entry of least span.
inline Echelon echelon(RingMatrix m) {
    Echelon e;
    const std::size_t rows = m.rows(), cols = m.cols();
    HalfLaurent prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::optional<std::size_t> best;
        for (std::size_t i = r; i < rows; ++i)
            if (!m(i, c).is_zero() && (!best || m(i, c).span() < m(*best, c).span() ||
                                       (m(i, c).span() == m(*best, c).span() && m(i, c).terms().size() < m(*best, c).terms().size())))
                best = i;
        if (!best) continue;
        std::swap(m.entries[r], m.entries[*best]);
        std::swap(m.row_labels[r], m.row_labels[*best]);
        const HalfLaurent pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const HalfLaurent factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                HalfLaurent v = pivot * m(i, j) - factor * m(r, j);
                m(i, j) = exact_quotient(v, prev);
            }
        }
        // Rows above are already final; entries left of c in lower rows are zero.
        for (std::size_t i = r + 1; i < rows; ++i) m(i, c) = HalfLaurent{};
        prev = pivot;
        e.pivots.push_back(c);
        ++r;
    }
    e.form = std::move(m);
    return e;
}

inline std::size_t rank(const RingMatrix& m) { return echelon(m).rank(); }

/// Rank over Q after substituting s for q^{1/2}.
inline std::size_t rank_at(const RingMatrix& m, const Rational& s) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).eval_at(s);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Substitution points used for the rank cross-check.
inline const std::vector<Rational>& rank_check_points() {
    static const std::vector<Rational> points{Rational(2), Rational(3, 5), Rational(-7, 3)};
    return points;
}

/// Fraction-field rank, verified against rational evaluation at three points
/// (a specialization can only lower the rank, so the maximum must agree).
inline std::size_t checked_rank(const RingMatrix& m) {
    const std::size_t r = rank(m);
    std::size_t best = 0;
    for (const auto& s : rank_check_points()) best = std::max(best, rank_at(m, s));
    if (best != r) throw std::logic_error("rank cross-check failed: symbolic " + std::to_string(r) + ", numeric " + std::to_string(best));
    return r;
}

inline std::size_t nullity(const RingMatrix& m) { return m.cols() - checked_rank(m); }

/// Scales `v` by a unit and by 1/content so its coefficients are coprime and
/// its exponents centred around zero, leading (first nonzero) coefficient positive.
inline RingVector normalize(RingVector v) {
    Integer g = 0;
    int lo = 0, hi = 0;
    bool any = false;
    for (const auto& x : v) {
        for (const auto& t : x.terms()) {
            g = boost::multiprecision::gcd(g, t.coeff);
            lo = any ? std::min(lo, t.exp2) : t.exp2;
            hi = any ? std::max(hi, t.exp2) : t.exp2;
            any = true;
        }
    }
    if (!any) return v;
    Integer sign = 1;
    for (const auto& x : v)
        if (!x.is_zero()) {
            sign = x.terms().front().coeff < 0 ? -1 : 1;
            break;
        }
    const int shift = -((lo + hi) >= 0 ? (lo + hi) / 2 : -((-(lo + hi) + 1) / 2));
    for (auto& x : v) {
        std::vector<std::pair<int, Integer>> pairs;
        for (const auto& t : x.terms()) pairs.emplace_back(t.exp2 + shift, sign * t.coeff / g);
        x = HalfLaurent::from_pairs(std::move(pairs));
    }
    return v;
}

/// A basis of the kernel over the fraction field, with ring entries.
inline std::vector<RingVector> kernel_basis(const RingMatrix& m) {
    const Echelon e = echelon(m);
    const auto& u = e.form;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    HalfLaurent det(1);
    for (std::size_t i = 0; i < e.rank(); ++i) det *= u(i, e.pivots[i]);
    std::vector<RingVector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RingVector x(m.cols());
        x[f] = det;
        for (std::size_t i = e.rank(); i-- > 0;) {
            HalfLaurent acc;
            for (std::size_t j = e.pivots[i] + 1; j < m.cols(); ++j)
                if (!u(i, j).is_zero() && !x[j].is_zero()) acc += u(i, j) * x[j];
            x[e.pivots[i]] = exact_quotient(-acc, u(i, e.pivots[i]));
        }
        // Strip common factors shared with the pivots, then normalize.
        for (std::size_t i = 0; i < e.rank(); ++i) {
            const HalfLaurent& p = u(i, e.pivots[i]);
            if (p.is_monomial()) continue;
            while (true) {
                RingVector y = x;
                bool ok = true;
                for (auto& v : y) {
                    auto q = v.divide_exact(p);
                    if (!q) {
                        ok = false;
                        break;
                    }
                    v = *q;
                }
                if (!ok) break;
                x = std::move(y);
            }
        }
        out.push_back(normalize(std::move(x)));
    }
    return out;
}

inline HalfLaurent determinant_2x2(const RingVector& c0, const RingVector& c1) {
    if (c0.size() != 2 || c1.size() != 2) throw std::invalid_argument("determinant_2x2 needs vectors of length 2");
    return c0[0] * c1[1] - c1[0] * c0[1];
}

// ---------------------------------------------------------------------------
// Named combinations

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// "q", "q^2", "q^{-1}", "q^{1/2}", "q^(-3/2)" -> exponent of q^{1/2}.
inline int parse_q_power(std::string_view s, const std::string& whole) {
    auto bad = [&]() -> int { throw std::invalid_argument("bad power of q in '" + whole + "'"); };
    if (s == "q") return 2;
    if (s.size() < 3 || s.substr(0, 2) != "q^") return bad();
    std::string e(s.substr(2));
    if ((e.front() == '{' && e.back() == '}') || (e.front() == '(' && e.back() == ')')) e = e.substr(1, e.size() - 2);
    const auto slash = e.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const int k = std::stoi(e, &used);
            if (used != e.size()) return bad();
            return 2 * k;
        }
        const int num = std::stoi(e.substr(0, slash), &used);
        if (used != slash || e.substr(slash + 1) != "2") return bad();
        return num;
    } catch (const std::logic_error&) {
        return bad();
    }
}

}  // namespace detail

/// Parses a combination such as "I_{C_{++}} - q^{1/2} I_{A_+}" of named basis
/// elements of I_{2n} (n <= 2) into a coefficient vector.
inline RingVector parse_combination(int n, std::string_view text) {
    const std::string whole(text);
    const auto& basis = cleaved_basis(n);
    RingVector v(basis.size());
    std::size_t k = 0;
    bool first = true;
    while (true) {
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
        if (k >= text.size()) break;
        int sign = 1;
        if (text[k] == '+' || text[k] == '-') {
            sign = text[k] == '-' ? -1 : 1;
            ++k;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in '" + whole + "'");
        }
        first = false;
        // A term runs until the next top-level '+' or '-' (braces protect signs in labels).
        int depth = 0;
        std::size_t end = k;
        for (; end < text.size(); ++end) {
            const char ch = text[end];
            if (ch == '{' || ch == '(') ++depth;
            if (ch == '}' || ch == ')') --depth;
            if (depth == 0 && (ch == '+' || ch == '-') && end > k) {
                // A sign directly after '_' belongs to a label such as A_+.
                if (text[end - 1] == '_') continue;
                break;
            }
        }
        std::string_view term = detail::trim(text.substr(k, end - k));
        k = end;
        int exp2 = 0;
        Integer coeff = sign;
        // Optional integer factor, then optional power of q.
        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
        if (digits > 0) {
            coeff *= Integer(std::string(term.substr(0, digits)));
            term = detail::trim(term.substr(digits));
            if (!term.empty() && term.front() == '*') term = detail::trim(term.substr(1));
        }
        if (!term.empty() && term.front() == 'q') {
            std::size_t stop = 1;
            if (stop < term.size() && term[stop] == '^') {
                ++stop;
                if (stop < term.size() && (term[stop] == '{' || term[stop] == '(')) {
                    const char close = term[stop] == '{' ? '}' : ')';
                    stop = term.find(close, stop);
                    if (stop == std::string_view::npos) throw std::invalid_argument("unbalanced exponent in '" + whole + "'");
                    ++stop;
                } else {
                    while (stop < term.size() && (std::isdigit(static_cast<unsigned char>(term[stop])) || term[stop] == '-')) ++stop;
                }
            }
            exp2 = detail::parse_q_power(term.substr(0, stop), whole);
            term = detail::trim(term.substr(stop));
            if (!term.empty() && term.front() == '*') term = detail::trim(term.substr(1));
        }
        std::string label(term);
        if (label.size() > 2 && label[0] == 'I' && label[1] == '_') {
            label = label.substr(2);
            if (label.size() >= 2 && label.front() == '{' && label.back() == '}') label = label.substr(1, label.size() - 2);
        }
        if (label.empty()) throw std::invalid_argument("missing basis label in '" + whole + "'");
        const CleavedLink link = (n == 1 && (label == "+" || label == "-")) ? link_from_label("I_" + label) : link_from_label(label);
        if (link.half_count() != n) throw std::invalid_argument("label " + label + " is not in I_" + std::to_string(2 * n));
        v[basis.index_of(link)] += HalfLaurent::monomial(exp2, coeff);
    }
    return v;
}

/// Inverse of parse_combination: one monomial term per line item, named labels.
inline std::string format_combination(int n, const RingVector& v) {
    const auto labels = module_labels(n);
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        for (auto it = v[k].terms().rbegin(); it != v[k].terms().rend(); ++it) {
            std::string c = HalfLaurent::monomial(it->exp2, it->coeff).to_string();
            const bool neg = c.front() == '-';
            if (neg) c = c.substr(1);
            std::string term = "I_{" + labels[k] + "}";
            if (c != "1") term = c + " " + term;
            if (out.empty()) out = (neg ? "-" : "") + term;
            else out += (neg ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace cleaved
