#pragma once

// Text format for planar and tangle diagrams.
//
//   # comment
//   boundaries 2,1            half-counts n_0,n_1,...
//   crossing 0 over=02        crossing id and over-strand (02 or 13)
//   arc 0:1-x0:3              endpoint = i:p (boundary) or x<id>:<port>
//   orient x0:0 -> x0:2       strand direction through a crossing, or
//   orient 0:1 -> x0:0        direction along an arc ending at a port
//   circles 1                 free circle count (default 0)
//
// Parsing reports syntax errors with line and column; semantic checks
// (coverage, planarity) are left to validate().

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diagram.hpp"

namespace cleaved {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, int column, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {

class LineCursor {
public:
    LineCursor(std::string_view text, const std::string& source, int line)
        : text_(text), source_(source), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(source_, line_, static_cast<int>(pos_) + 1, what);
    }
    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                       text_[pos_] == '-'))
            ++pos_;
        if (start == pos_) fail("expected a keyword");
        return std::string(text_.substr(start, pos_ - start));
    }
    int integer() {
        skip_space();
        int value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || value < 0) fail("expected a nonnegative integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }
    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void expect(std::string_view s) {
        skip_space();
        if (text_.substr(pos_, s.size()) != s) fail("expected '" + std::string(s) + "'");
        pos_ += s.size();
    }
    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    std::size_t position() const { return pos_; }
    void finish() {
        if (!at_end()) fail("unexpected trailing text");
    }

private:
    std::string_view text_;
    const std::string& source_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a tangle diagram (a planar diagram is one without crossings).
inline TangleDiagram parse_tangle(std::string_view text, const std::string& source = "<input>") {
    TangleDiagram t;
    bool have_boundaries = false;
    std::map<int, int> crossing_index;  // file id -> position
    struct PendingOrient {
        Endpoint from, to;
        detail::LineCursor where;
    };
    std::vector<PendingOrient> orients;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        detail::LineCursor cur(line, source, line_no);
        if (cur.at_end()) {
            if (end == text.size()) break;
            continue;
        }
        auto endpoint = [&](detail::LineCursor& c) -> Endpoint {
            if (c.peek('x')) {
                c.expect('x');
                const int id = c.integer();
                auto it = crossing_index.find(id);
                if (it == crossing_index.end()) c.fail("undeclared crossing x" + std::to_string(id));
                c.expect(':');
                const int port = c.integer();
                if (port > 3) c.fail("crossing port must be 0..3");
                return Endpoint::port(it->second, port);
            }
            const int b = c.integer();
            c.expect(':');
            const int p = c.integer();
            if (have_boundaries) {
                if (b >= static_cast<int>(t.half_counts.size())) c.fail("boundary index " + std::to_string(b) + " out of range");
                if (p < 1 || p > 2 * t.half_counts[static_cast<std::size_t>(b)])
                    c.fail("point " + std::to_string(b) + ":" + std::to_string(p) + " out of range");
            }
            return Endpoint::boundary(b, p);
        };
        const std::string kw = cur.word();
        if (kw == "boundaries") {
            if (have_boundaries) cur.fail("duplicate 'boundaries' statement");
            if (!t.arcs.empty()) cur.fail("'boundaries' must precede arcs");
            t.half_counts.clear();
            t.half_counts.push_back(cur.integer());
            while (cur.peek(',')) {
                cur.expect(',');
                t.half_counts.push_back(cur.integer());
            }
            have_boundaries = true;
        } else if (kw == "crossing") {
            const int id = cur.integer();
            if (crossing_index.count(id)) cur.fail("duplicate crossing id " + std::to_string(id));
            cur.expect("over=");
            const std::string which = cur.word();
            Crossing x;
            if (which == "02") x.over02 = true;
            else if (which == "13") x.over02 = false;
            else cur.fail("over= must be 02 or 13");
            crossing_index[id] = static_cast<int>(t.crossings.size());
            t.crossings.push_back(x);
        } else if (kw == "arc") {
            if (!have_boundaries) cur.fail("'boundaries' must come first");
            const Endpoint a = endpoint(cur);
            cur.expect('-');
            const Endpoint b = endpoint(cur);
            t.arcs.emplace_back(a, b);
        } else if (kw == "orient") {
            if (!have_boundaries) cur.fail("'boundaries' must come first");
            const Endpoint a = endpoint(cur);
            cur.expect("->");
            const Endpoint b = endpoint(cur);
            orients.push_back({a, b, cur});
        } else if (kw == "circles") {
            t.free_circles = cur.integer();
        } else {
            cur.fail("unknown statement '" + kw + "'");
        }
        cur.finish();
        if (end == text.size()) break;
    }
    if (!have_boundaries) throw ParseError(source, line_no, 1, "missing 'boundaries' statement");

    auto set_dir = [&](detail::LineCursor& where, int c, int from_port) {
        auto& x = t.crossings[static_cast<std::size_t>(c)];
        const int strand = from_port % 2;
        const StrandDir d = from_port < 2 ? StrandDir::Forward : StrandDir::Backward;
        if (x.dir(strand) != StrandDir::Unset && x.dir(strand) != d) where.fail("conflicting orientation");
        x.dir(strand) = d;
    };
    for (auto& o : orients) {
        if (o.from.is_port() && o.to.is_port() && o.from.index == o.to.index && (o.from.slot + 2) % 4 == o.to.slot) {
            set_dir(o.where, o.from.index, o.from.slot);
            continue;
        }
        bool found = false;
        for (const auto& [a, b] : t.arcs) {
            if ((a == o.from && b == o.to) || (a == o.to && b == o.from)) {
                found = true;
                break;
            }
        }
        if (!found) o.where.fail("orient must name a crossing strand or an arc");
        if (!o.to.is_port() && !o.from.is_port()) o.where.fail("orient along an arc needs a crossing port at one end");
        if (o.to.is_port()) set_dir(o.where, o.to.index, o.to.slot);                      // entering at `to`
        if (o.from.is_port()) set_dir(o.where, o.from.index, (o.from.slot + 2) % 4);  // leaving at `from`
    }
    return t;
}

inline PlanarDiagram parse_planar(std::string_view text, const std::string& source = "<input>") {
    auto t = parse_tangle(text, source);
    if (!t.crossings.empty()) throw ParseError(source, 1, 1, "planar diagram may not contain crossings");
    return to_planar(t);
}

inline std::string serialize(const TangleDiagram& t) {
    std::ostringstream os;
    os << "boundaries ";
    for (std::size_t i = 0; i < t.half_counts.size(); ++i) os << (i ? "," : "") << t.half_counts[i];
    os << "\n";
    for (std::size_t c = 0; c < t.crossings.size(); ++c)
        os << "crossing " << c << " over=" << (t.crossings[c].over02 ? "02" : "13") << "\n";
    for (const auto& [a, b] : t.arcs) os << "arc " << a.to_string() << "-" << b.to_string() << "\n";
    for (std::size_t c = 0; c < t.crossings.size(); ++c) {
        for (int strand = 0; strand < 2; ++strand) {
            const StrandDir d = t.crossings[c].dir(strand);
            if (d == StrandDir::Unset) continue;
            const int from = d == StrandDir::Forward ? strand : strand + 2;
            os << "orient x" << c << ":" << from << " -> x" << c << ":" << (from + 2) % 4 << "\n";
        }
    }
    os << "circles " << t.free_circles << "\n";
    return os.str();
}

inline std::string serialize(const PlanarDiagram& p) { return serialize(to_tangle(p)); }

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline TangleDiagram load_tangle(const std::string& path) { return parse_tangle(read_text_file(path), path); }
inline PlanarDiagram load_planar(const std::string& path) { return parse_planar(read_text_file(path), path); }

}  // namespace cleaved
