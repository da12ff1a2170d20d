#pragma once

// Sparse matrices over Z[q^{1/2}, q^{-1/2}] between tensor products of the
// cleaved-link modules, and the operadic composition of such matrices.
//
// Rows are indexed by cleaved{n_0}. Columns are indexed by tuples
// (L_1, ..., L_m) in row-major order over the per-factor enumerations; m = 0
// gives a single column.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cleaved_link.hpp"
#include "ring.hpp"

namespace cleaved {

class BasisMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::uint64_t tensor_dimension(const std::vector<int>& ns) {
    std::uint64_t d = 1;
    for (int n : ns) d *= cleaved_basis(n).size();
    return d;
}

/// Splits a row-major tuple index into per-factor basis indices.
inline std::vector<std::size_t> split_tuple(std::uint64_t col, const std::vector<int>& ns) {
    std::vector<std::size_t> out(ns.size());
    for (std::size_t k = ns.size(); k-- > 0;) {
        const std::uint64_t d = cleaved_basis(ns[k]).size();
        out[k] = static_cast<std::size_t>(col % d);
        col /= d;
    }
    return out;
}

inline std::uint64_t join_tuple(const std::vector<std::size_t>& idx, const std::vector<int>& ns) {
    std::uint64_t col = 0;
    for (std::size_t k = 0; k < ns.size(); ++k) col = col * cleaved_basis(ns[k]).size() + idx[k];
    return col;
}

class PartitionMatrix {
public:
    using Key = std::pair<std::uint64_t, std::uint64_t>;

    PartitionMatrix() = default;
    PartitionMatrix(int row_n, std::vector<int> col_ns) : row_n_(row_n), col_ns_(std::move(col_ns)) {
        rows_ = cleaved_basis(row_n_).size();
        cols_ = tensor_dimension(col_ns_);
    }

    static PartitionMatrix identity(int n) {
        PartitionMatrix m(n, {n});
        for (std::uint64_t k = 0; k < m.rows(); ++k) m.set(k, k, 1);
        return m;
    }

    int row_half_count() const { return row_n_; }
    const std::vector<int>& column_half_counts() const { return col_ns_; }
    std::uint64_t rows() const { return rows_; }
    std::uint64_t cols() const { return cols_; }
    const std::map<Key, HalfLaurent>& entries() const { return entries_; }
    std::size_t nonzero_count() const { return entries_.size(); }

    HalfLaurent at(std::uint64_t r, std::uint64_t c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? HalfLaurent{} : it->second;
    }

    void set(std::uint64_t r, std::uint64_t c, HalfLaurent v) {
        check_index(r, c);
        if (v.is_zero()) entries_.erase({r, c});
        else entries_[{r, c}] = std::move(v);
    }

    void add_to(std::uint64_t r, std::uint64_t c, const HalfLaurent& v) {
        if (v.is_zero()) return;
        check_index(r, c);
        auto [it, inserted] = entries_.try_emplace({r, c}, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    bool same_shape(const PartitionMatrix& o) const { return row_n_ == o.row_n_ && col_ns_ == o.col_ns_; }

    friend bool operator==(const PartitionMatrix& a, const PartitionMatrix& b) {
        return a.same_shape(b) && a.entries_ == b.entries_;
    }

    friend PartitionMatrix operator+(const PartitionMatrix& a, const PartitionMatrix& b) {
        if (!a.same_shape(b)) throw BasisMismatch("cannot add partition matrices of different shapes");
        PartitionMatrix r = a;
        for (const auto& [k, v] : b.entries_) r.add_to(k.first, k.second, v);
        return r;
    }
    friend PartitionMatrix operator-(const PartitionMatrix& a, const PartitionMatrix& b) {
        return a + b.scaled(HalfLaurent(-1));
    }

    PartitionMatrix scaled(const HalfLaurent& s) const {
        PartitionMatrix r(row_n_, col_ns_);
        if (s.is_zero()) return r;
        for (const auto& [k, v] : entries_) r.entries_.emplace(k, v * s);
        return r;
    }

    /// Entry by basis elements: row link and column tuple.
    HalfLaurent at(const CleavedLink& row, const std::vector<CleavedLink>& col) const {
        if (col.size() != col_ns_.size()) throw BasisMismatch("column tuple has the wrong length");
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < col.size(); ++k) idx.push_back(cleaved_basis(col_ns_[k]).index_of(col[k]));
        return at(cleaved_basis(row_n_).index_of(row), join_tuple(idx, col_ns_));
    }

    std::string shape_string() const {
        return signature_label(row_n_, col_ns_);
    }

    static std::string signature_label(int row_n, const std::vector<int>& col_ns) {
        std::string s = "(" + std::to_string(row_n);
        for (std::size_t k = 0; k < col_ns.size(); ++k) s += (k == 0 ? ";" : ",") + std::to_string(col_ns[k]);
        return s + ")";
    }

private:
    void check_index(std::uint64_t r, std::uint64_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("partition matrix index out of range");
    }

    int row_n_ = 0;
    std::vector<int> col_ns_;
    std::uint64_t rows_ = 1;
    std::uint64_t cols_ = 1;
    std::map<Key, HalfLaurent> entries_;
};

/// Sparse vector over a tensor basis.
struct ModuleVector {
    std::vector<int> half_counts;  // factors; a single factor for I_{2n}
    std::map<std::uint64_t, HalfLaurent> coeffs;

    static ModuleVector basis_element(const CleavedLink& l) {
        ModuleVector v{{l.half_count()}, {}};
        v.coeffs[cleaved_basis(l.half_count()).index_of(l)] = 1;
        return v;
    }
    static ModuleVector unit() { return {{}, {{0, HalfLaurent(1)}}}; }

    void add(std::uint64_t idx, const HalfLaurent& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    HalfLaurent coeff(std::uint64_t idx) const {
        auto it = coeffs.find(idx);
        return it == coeffs.end() ? HalfLaurent{} : it->second;
    }
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

inline ModuleVector apply(const PartitionMatrix& z, const ModuleVector& v) {
    if (v.half_counts != z.column_half_counts())
        throw BasisMismatch("vector basis does not match the columns of a " + z.shape_string() + " matrix");
    ModuleVector out{{z.row_half_count()}, {}};
    for (const auto& [key, entry] : z.entries()) {
        auto it = v.coeffs.find(key.second);
        if (it != v.coeffs.end()) out.add(key.first, entry * it->second);
    }
    return out;
}

/// Z_R ∘_i Z_T: the matrix of the composite map, where T's output is fed into
/// input factor i (1-based) of R. Columns of the result are R's factors
/// 1..i-1, then T's factors, then R's factors i+1.., as for diagram composition.
inline PartitionMatrix compose_at(const PartitionMatrix& r, int i, const PartitionMatrix& t) {
    const auto& rns = r.column_half_counts();
    if (i < 1 || i > static_cast<int>(rns.size()))
        throw BasisMismatch("compose_at: factor index " + std::to_string(i) + " out of range for " + r.shape_string());
    if (rns[static_cast<std::size_t>(i - 1)] != t.row_half_count())
        throw BasisMismatch("compose_at: cannot feed " + t.shape_string() + " into factor " + std::to_string(i) +
                            " of " + r.shape_string());
    std::vector<int> ns(rns.begin(), rns.begin() + (i - 1));
    ns.insert(ns.end(), t.column_half_counts().begin(), t.column_half_counts().end());
    ns.insert(ns.end(), rns.begin() + i, rns.end());
    PartitionMatrix out(r.row_half_count(), ns);

    std::uint64_t suffix_size = 1;
    for (std::size_t k = static_cast<std::size_t>(i); k < rns.size(); ++k) suffix_size *= cleaved_basis(rns[k]).size();
    const std::uint64_t di = cleaved_basis(rns[static_cast<std::size_t>(i - 1)]).size();
    const std::uint64_t tcols = t.cols();

    std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, const HalfLaurent*>>> t_rows;
    for (const auto& [key, v] : t.entries()) t_rows[key.first].emplace_back(key.second, &v);

    for (const auto& [key, rv] : r.entries()) {
        const std::uint64_t c = key.second;
        const std::uint64_t prefix = c / (di * suffix_size);
        const std::uint64_t l = (c / suffix_size) % di;
        const std::uint64_t suffix = c % suffix_size;
        auto it = t_rows.find(l);
        if (it == t_rows.end()) continue;
        for (const auto& [ct, tv] : it->second)
            out.add_to(key.first, (prefix * tcols + ct) * suffix_size + suffix, rv * *tv);
    }
    return out;
}

/// Matrix product of endomorphisms of I_{2n}: (a * b)(x) = a(b(x)).
inline PartitionMatrix operator*(const PartitionMatrix& a, const PartitionMatrix& b) { return compose_at(a, 1, b); }

/// Conjugation symmetry: relabels rows and every column factor by
/// conjugate_link and conjugates every entry.
inline PartitionMatrix conj_labels(const PartitionMatrix& z) {
    PartitionMatrix out(z.row_half_count(), z.column_half_counts());
    const auto& rb = cleaved_basis(z.row_half_count());
    const auto& ns = z.column_half_counts();
    for (const auto& [key, v] : z.entries()) {
        const std::uint64_t r = rb.index_of(conjugate_link(rb[key.first]));
        auto idx = split_tuple(key.second, ns);
        for (std::size_t k = 0; k < ns.size(); ++k) {
            const auto& b = cleaved_basis(ns[k]);
            idx[k] = b.index_of(conjugate_link(b[idx[k]]));
        }
        out.set(r, join_tuple(idx, ns), v.conjugate());
    }
    return out;
}

/// Dense copy for small matrices.
inline std::vector<std::vector<HalfLaurent>> to_dense(const PartitionMatrix& z) {
    std::vector<std::vector<HalfLaurent>> d(z.rows(), std::vector<HalfLaurent>(z.cols()));
    for (const auto& [key, v] : z.entries()) d[key.first][key.second] = v;
    return d;
}

inline PartitionMatrix from_dense(int row_n, std::vector<int> col_ns, const std::vector<std::vector<HalfLaurent>>& d) {
    PartitionMatrix z(row_n, std::move(col_ns));
    if (d.size() != z.rows()) throw BasisMismatch("dense matrix has the wrong number of rows");
    for (std::uint64_t r = 0; r < z.rows(); ++r) {
        if (d[r].size() != z.cols()) throw BasisMismatch("dense matrix has the wrong number of columns");
        for (std::uint64_t c = 0; c < z.cols(); ++c) z.set(r, c, d[r][c]);
    }
    return z;
}

}  // namespace cleaved
