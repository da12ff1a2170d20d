#pragma once

// The `cleaved` command-line tool. run() is separate from main() so the test
// suite can drive it in-process.
//
// Exit codes: 0 success, 1 domain error (invalid diagram, signature mismatch,
// failed check), 2 usage or parse error.

#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cleaved/braid.hpp"
#include "cleaved/cleaved_link.hpp"
#include "cleaved/diagram.hpp"
#include "cleaved/diagram_io.hpp"
#include "cleaved/kauffman.hpp"
#include "cleaved/partition.hpp"
#include "cleaved/tangle.hpp"
#include "cleaved/tlcompare.hpp"
#include "json_io.hpp"

namespace cleaved::cli {

using json_io::json;

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Input errors that are reported with exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_input(const std::string& path) {
    if (!std::filesystem::exists(path)) throw InputError(path + ": no such file");
    return read_text_file(path);
}

inline TangleDiagram tangle_file(const std::string& path) { return parse_tangle(read_input(path), path); }
inline PlanarDiagram planar_file(const std::string& path) { return parse_planar(read_input(path), path); }

inline void print_matrix_text(std::ostream& out, const PartitionMatrix& z) {
    const auto rows = module_labels(z.row_half_count());
    const auto cols = json_io::column_labels(z);
    out << "signature " << z.shape_string() << ", " << z.rows() << " x " << z.cols() << ", " << z.nonzero_count()
        << " nonzero\n";
    for (const auto& [key, v] : z.entries()) out << rows[key.first] << " <- " << cols[key.second] << " : " << v << "\n";
    if (z.column_half_counts().empty()) {
        RingVector v(z.rows());
        for (const auto& [key, x] : z.entries()) v[key.first] = x;
        out << "Z(1) = " << format_combination(z.row_half_count(), v) << "\n";
    }
}

inline void print_ring_matrix_text(std::ostream& out, const RingMatrix& m) {
    out << m.rows() << " x " << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "  [";
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c);
        out << "]  " << m.row_labels[r] << "\n";
    }
}

}  // namespace detail

struct Options {
    std::string format = "text";
    int n = 0;
    int strands = 2;
    int boundary = 1;
    bool strict = false;
    std::string word;
    std::string file;
    std::string file2;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cleaved-link planar algebra: partition maps, tangle invariants and braid representations"};
    app.name("cleaved");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* basis = app.add_subcommand("basis", "Enumerate the cleaved-link basis of I_{2n}");
    basis->add_option("--n", o.n, "Half the number of boundary points")->required()->check(CLI::Range(0, 6));

    auto* zmap = app.add_subcommand("zmap", "Partition map of a planar diagram");
    zmap->add_option("file", o.file, "Diagram file")->required();

    auto* compose_cmd = app.add_subcommand("compose", "Glue diagram T into inner boundary i of diagram R");
    compose_cmd->add_option("R", o.file, "Outer diagram file")->required();
    compose_cmd->add_option("i", o.boundary, "Inner boundary index (1-based)")->required();
    compose_cmd->add_option("T", o.file2, "Inner diagram file")->required();

    auto* jones = app.add_subcommand("jones", "Jones polynomial of a closed tangle diagram");
    jones->add_option("file", o.file, "Tangle file")->required();

    auto* ztangle = app.add_subcommand("ztangle", "Partition map Z_T of an oriented tangle diagram");
    ztangle->add_option("file", o.file, "Tangle file")->required();

    auto* skein = app.add_subcommand("skein-check", "Check the unshifted skein relation at every crossing");
    skein->add_option("file", o.file, "Tangle file")->required();

    auto* mirror_cmd = app.add_subcommand("mirror", "Mirror a tangle diagram (flip every crossing)");
    mirror_cmd->add_option("file", o.file, "Tangle file")->required();

    auto* braid = app.add_subcommand("braid-rep", "Representation matrix of a braid word");
    braid->add_option("--strands", o.strands, "Number of strands (even)")->required();
    braid->add_option("word", o.word, "Word such as \"s1 s2^-1\" (empty for the identity)")->required();

    auto* pairing_cmd = app.add_subcommand("pairing", "Annular pairing matrix on I_{2n} x I_{2n}");
    pairing_cmd->add_option("--n", o.n, "Half the number of boundary points")->required()->check(CLI::Range(0, 4));

    auto* tlm = app.add_subcommand("tl-matrices", "Matrices of the Temperley-Lieb generators on I_{2n}");
    tlm->add_option("--n", o.n, "Half the number of boundary points")->required()->check(CLI::Range(1, 4));

    auto* tlk = app.add_subcommand("tl-kernels", "Kernels of the Temperley-Lieb generator matrices");
    tlk->add_option("--n", o.n, "Half the number of boundary points")->required()->check(CLI::Range(1, 3));

    auto* validate_cmd = app.add_subcommand("validate", "Check a diagram file");
    validate_cmd->add_flag("--strict", o.strict, "Also require a planar embedding");
    validate_cmd->add_option("file", o.file, "Diagram file")->required();

    std::vector<std::string> argv_store{"cleaved"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    const bool as_json = o.format == "json";

    try {
        if (!smoothing_convention_holds()) throw std::logic_error("internal smoothing convention self-test failed");

        if (basis->parsed()) {
            const auto& links = enumerate_cleaved(o.n);
            if (as_json) {
                json j;
                j["n"] = o.n;
                j["dimension"] = links.size();
                json items = json::array();
                for (std::size_t k = 0; k < links.size(); ++k)
                    items.push_back({{"index", k},
                                     {"label", link_label(links[k])},
                                     {"inside", links[k].inside.to_string()},
                                     {"outside", links[k].outside.to_string()},
                                     {"decorations", links[k].decoration_string()}});
                j["basis"] = std::move(items);
                out << j.dump(2) << "\n";
            } else {
                out << "cleaved{" << o.n << "}: " << links.size() << " elements\n";
                for (std::size_t k = 0; k < links.size(); ++k) {
                    out << k << "  " << links[k].to_string();
                    if (auto name = named_label(links[k])) out << "  " << *name;
                    out << "\n";
                }
            }
        } else if (zmap->parsed()) {
            const auto z = partition_map(detail::planar_file(o.file));
            if (as_json) out << json_io::to_json(z).dump(2) << "\n";
            else detail::print_matrix_text(out, z);
        } else if (compose_cmd->parsed()) {
            const auto r = detail::tangle_file(o.file);
            const auto t = detail::tangle_file(o.file2);
            const auto c = compose(r, o.boundary, t);
            if (as_json) out << json_io::diagram_json(c).dump(2) << "\n";
            else out << serialize(c);
        } else if (jones->parsed()) {
            const auto t = detail::tangle_file(o.file);
            const auto value = jones_closed(t);
            if (as_json) {
                json j;
                j["jones"] = json_io::to_json(value);
                j["text"] = value.to_string();
                out << j.dump(2) << "\n";
            } else {
                out << value << "\n";
            }
        } else if (ztangle->parsed()) {
            const auto z = partition_tangle(detail::tangle_file(o.file));
            if (as_json) out << json_io::to_json(z).dump(2) << "\n";
            else detail::print_matrix_text(out, z);
        } else if (skein->parsed()) {
            const auto t = detail::tangle_file(o.file);
            const auto whole = unshifted_partition(t);
            json results = json::array();
            bool all = true;
            for (int c = 0; c < static_cast<int>(t.crossings.size()); ++c) {
                const auto z0 = unshifted_partition(resolve_crossing(t, c, 0));
                const auto z1 = unshifted_partition(resolve_crossing(t, c, 1));
                const bool ok = whole == z0 - z1.scaled(HalfLaurent::q());
                all = all && ok;
                if (as_json) results.push_back({{"crossing", c}, {"holds", ok}});
                else out << "crossing " << c << ": " << (ok ? "holds" : "FAILS") << "\n";
            }
            if (as_json) out << json{{"crossings", results}, {"all_hold", all}}.dump(2) << "\n";
            else out << (all ? "skein relation holds at every crossing\n" : "skein relation fails\n");
            if (!all) return kDomainError;
        } else if (mirror_cmd->parsed()) {
            const auto m = mirror(detail::tangle_file(o.file));
            if (as_json) out << json_io::diagram_json(m).dump(2) << "\n";
            else out << serialize(m);
        } else if (braid->parsed()) {
            const auto w = BraidWord::parse(o.strands, o.word);
            const auto z = braid_rep(w);
            if (as_json) {
                json j = json_io::to_json(z);
                j["word"] = w.to_string();
                j["strands"] = w.strands;
                out << j.dump(2) << "\n";
            } else {
                out << "braid " << w.to_string() << " on " << w.strands << " strands\n";
                detail::print_matrix_text(out, z);
            }
        } else if (pairing_cmd->parsed()) {
            const auto z = pairing_matrix(o.n);
            const auto& b = cleaved_basis(o.n);
            bool permutation = z.nonzero_count() == b.size();
            for (const auto& [key, v] : z.entries()) permutation = permutation && v == HalfLaurent(1);
            if (as_json) {
                json j = json_io::to_json(z);
                j["permutation"] = permutation;
                out << j.dump(2) << "\n";
            } else {
                detail::print_matrix_text(out, z);
                out << (permutation ? "pairing is a permutation matrix\n" : "pairing is NOT a permutation matrix\n");
            }
            if (!permutation) return kDomainError;
        } else if (tlm->parsed()) {
            const auto ms = tl_generator_matrices(o.n);
            if (as_json) {
                json j = json::array();
                for (const auto& m : ms) j.push_back(json_io::to_json(m));
                out << json{{"n", o.n}, {"matrices", j}}.dump(2) << "\n";
            } else {
                out << "basis:";
                for (const auto& l : module_labels(o.n)) out << " " << l;
                out << "\n";
                for (std::size_t k = 0; k < ms.size(); ++k) {
                    out << "M_" << k + 1 << ": ";
                    detail::print_ring_matrix_text(out, ms[k]);
                }
            }
        } else if (tlk->parsed()) {
            auto ms = tl_generator_matrices(o.n);
            std::vector<std::pair<std::string, RingMatrix>> named;
            for (std::size_t k = 0; k < ms.size(); ++k) named.emplace_back("M_" + std::to_string(k + 1), ms[k]);
            named.emplace_back("joint", stack(ms));
            json j = json::array();
            for (const auto& [name, m] : named) {
                const auto ker = kernel_basis(m);
                for (const auto& v : ker)
                    if (!kernel_membership(m, v)) throw std::logic_error("computed kernel vector fails verification");
                const std::size_t null = nullity(m);
                if (as_json) {
                    json vs = json::array();
                    for (const auto& v : ker) vs.push_back({{"coefficients", json_io::to_json(v)}, {"text", format_combination(o.n, v)}});
                    j.push_back({{"name", name}, {"nullity", null}, {"kernel", vs}});
                } else {
                    out << name << ": nullity " << null << "\n";
                    for (const auto& v : ker) out << "  " << format_combination(o.n, v) << "\n";
                }
            }
            if (as_json) out << json{{"n", o.n}, {"kernels", j}}.dump(2) << "\n";
        } else if (validate_cmd->parsed()) {
            const auto t = detail::tangle_file(o.file);
            const auto report = validate(t, o.strict);
            if (as_json) {
                json vs = json::array();
                for (const auto& v : report.violations) vs.push_back(v.message);
                out << json{{"valid", report.ok()}, {"signature", t.signature()}, {"violations", vs}}.dump(2) << "\n";
            } else if (report.ok()) {
                out << "valid, signature " << t.signature() << "\n";
            } else {
                out << "invalid:\n" << report.summary() << "\n";
            }
            if (!report.ok()) return kDomainError;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const BraidError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}

}  // namespace cleaved::cli
