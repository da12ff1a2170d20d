#pragma once

// Exact arithmetic in Z[q^{1/2}, q^{-1/2}].
//
// A HalfLaurent stores its terms as (e, c) pairs meaning c * q^{e/2}, sorted by
// e with no zero coefficients. Exponents are doubled so everything is
// integer-indexed; coefficients are arbitrary precision.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cleaved {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Term {
    int exp2;       // exponent of q^{1/2}
    Integer coeff;  // never zero inside a HalfLaurent

    friend bool operator==(const Term&, const Term&) = default;
};

class HalfLaurent {
public:
    HalfLaurent() = default;
    HalfLaurent(long long c) {  // NOLINT(google-explicit-constructor): scalars embed
        if (c != 0) terms_.push_back({0, Integer(c)});
    }

    static HalfLaurent monomial(int exp2, Integer coeff = 1) {
        HalfLaurent r;
        if (coeff != 0) r.terms_.push_back({exp2, std::move(coeff)});
        return r;
    }
    /// q^{k/2}
    static HalfLaurent q_half(int k = 1) { return monomial(k); }
    /// q^{k}
    static HalfLaurent q(int k = 1) { return monomial(2 * k); }
    /// q + q^{-1}, the value of a closed loop.
    static HalfLaurent loop() { return q(1) + q(-1); }

    /// Builds from arbitrary (exp2, coeff) pairs; merges duplicates and drops zeros.
    static HalfLaurent from_pairs(std::vector<std::pair<int, Integer>> pairs) {
        std::sort(pairs.begin(), pairs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        HalfLaurent r;
        for (auto& [e, c] : pairs) {
            if (!r.terms_.empty() && r.terms_.back().exp2 == e) {
                r.terms_.back().coeff += c;
                if (r.terms_.back().coeff == 0) r.terms_.pop_back();
            } else if (c != 0) {
                r.terms_.push_back({e, std::move(c)});
            }
        }
        return r;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exp2() const { return terms_.front().exp2; }
    int max_exp2() const { return terms_.back().exp2; }
    int span() const { return is_zero() ? -1 : max_exp2() - min_exp2(); }

    Integer coeff(int exp2) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp2,
                                   [](const Term& t, int e) { return t.exp2 < e; });
        return (it != terms_.end() && it->exp2 == exp2) ? it->coeff : Integer(0);
    }

    friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

    HalfLaurent operator-() const {
        HalfLaurent r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    HalfLaurent& operator+=(const HalfLaurent& o) { return *this = *this + o; }
    HalfLaurent& operator-=(const HalfLaurent& o) { return *this = *this - o; }
    HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

    friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
        return merge(a, b, false);
    }
    friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) {
        return merge(a, b, true);
    }

    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_monomial()) return a.times_monomial(b.terms_[0].exp2, b.terms_[0].coeff);
        if (a.is_monomial()) return b.times_monomial(a.terms_[0].exp2, a.terms_[0].coeff);
        const int lo = a.min_exp2() + b.min_exp2();
        std::vector<Integer> dense(static_cast<std::size_t>(a.span() + b.span() + 1));
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_)
                dense[static_cast<std::size_t>(x.exp2 + y.exp2 - lo)] += x.coeff * y.coeff;
        HalfLaurent r;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (dense[i] != 0) r.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
        return r;
    }

    HalfLaurent times_monomial(int exp2, const Integer& c) const {
        if (c == 0) return {};
        HalfLaurent r = *this;
        for (auto& t : r.terms_) {
            t.exp2 += exp2;
            t.coeff *= c;
        }
        return r;
    }

    HalfLaurent pow(unsigned k) const {
        HalfLaurent result(1), base = *this;
        while (k) {
            if (k & 1u) result *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return result;
    }

    /// p*(q) = p(q^{-1})
    HalfLaurent conjugate() const {
        HalfLaurent r;
        r.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->exp2, it->coeff});
        return r;
    }

    /// Substitutes s for q^{1/2}.
    Rational eval_at(const Rational& s) const {
        if (s == 0) throw std::invalid_argument("eval_at: q^{1/2} cannot be substituted by 0");
        Rational total = 0;
        for (const auto& t : terms_) total += Rational(t.coeff) * ipow(s, t.exp2);
        return total;
    }

    /// Quotient a / b when b divides a in the ring, std::nullopt otherwise.
    std::optional<HalfLaurent> divide_exact(const HalfLaurent& b) const {
        if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
        if (is_zero()) return HalfLaurent{};
        // Long division from the top term; everything is a polynomial in q^{1/2}
        // after shifting, so the remainder degree strictly decreases.
        HalfLaurent rem = *this;
        std::vector<std::pair<int, Integer>> quot;
        const Term& lead = b.terms_.back();
        while (!rem.is_zero()) {
            if (rem.span() < b.span()) return std::nullopt;
            const Term& top = rem.terms_.back();
            if (top.coeff % lead.coeff != 0) return std::nullopt;
            const int e = top.exp2 - lead.exp2;
            Integer c = top.coeff / lead.coeff;
            rem -= b.times_monomial(e, c);
            quot.emplace_back(e, std::move(c));
        }
        return from_pairs(std::move(quot));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Integer c = it->coeff;
            const bool neg = c < 0;
            if (neg) c = -c;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            if (it->exp2 == 0) {
                os << c;
                continue;
            }
            if (c != 1) os << c << "*";
            os << "q";
            if (it->exp2 % 2 == 0) {
                if (it->exp2 != 2) os << "^" << it->exp2 / 2;
            } else {
                os << "^(" << it->exp2 << "/2)";
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const HalfLaurent& p) { return os << p.to_string(); }

private:
    static Rational ipow(const Rational& s, int e) {
        Rational base = e < 0 ? Rational(1) / s : s;
        unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
        Rational r = 1;
        while (k) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return r;
    }

    static HalfLaurent merge(const HalfLaurent& a, const HalfLaurent& b, bool subtract) {
        HalfLaurent r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->exp2 < j->exp2)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->exp2 < i->exp2) {
                r.terms_.push_back({j->exp2, subtract ? Integer(-j->coeff) : j->coeff});
                ++j;
            } else {
                Integer c = subtract ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
                if (c != 0) r.terms_.push_back({i->exp2, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

/// Accumulates signed monomials with machine-word counts; used in hot loops
/// where every contribution is +-q^{e/2}.
class MonomialAccumulator {
public:
    void add(int exp2, std::int64_t count = 1) {
        if (counts_.empty()) {
            lo_ = exp2;
            counts_.push_back(count);
            return;
        }
        if (exp2 < lo_) {
            counts_.insert(counts_.begin(), static_cast<std::size_t>(lo_ - exp2), 0);
            lo_ = exp2;
        }
        const auto idx = static_cast<std::size_t>(exp2 - lo_);
        if (idx >= counts_.size()) counts_.resize(idx + 1, 0);
        counts_[idx] += count;
    }
    void merge(const MonomialAccumulator& o) {
        for (std::size_t i = 0; i < o.counts_.size(); ++i)
            if (o.counts_[i] != 0) add(o.lo_ + static_cast<int>(i), o.counts_[i]);
    }
    HalfLaurent value() const {
        std::vector<std::pair<int, Integer>> pairs;
        for (std::size_t i = 0; i < counts_.size(); ++i)
            if (counts_[i] != 0) pairs.emplace_back(lo_ + static_cast<int>(i), Integer(counts_[i]));
        return HalfLaurent::from_pairs(std::move(pairs));
    }

private:
    int lo_ = 0;
    std::vector<std::int64_t> counts_;
};

}  // namespace cleaved
