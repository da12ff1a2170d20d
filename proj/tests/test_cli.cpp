#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cleaved/braid.hpp"
#include "cleaved/diagram_io.hpp"
#include "cleaved/partition.hpp"
#include "cleaved/tangle.hpp"
#include "cleaved/tlcompare.hpp"
#include "cli_app.hpp"
#include "json_io.hpp"

using cleaved::HalfLaurent;
using cleaved::cli::json;
using Q = HalfLaurent;

namespace {

std::string file(const std::string& name) { return std::string(CLEAVED_DIAGRAM_DIR) + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cleaved::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"no-such-command"}).code, 2);
    EXPECT_EQ(run({"basis", "--n", "1", "--bogus"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "basis", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"zmap", file("does_not_exist.pd")}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ParseErrorReportsPosition) {
    const auto path = temp_file("cleaved_cli_bad.pd", "boundaries 1\narc 0:1-0:7\n");
    const auto r = run({"zmap", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
}

TEST(Cli, Basis) {
    const auto r = run({"basis", "--n", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("12 elements"), std::string::npos);
    EXPECT_NE(r.out.find("B_{-+}"), std::string::npos);
    const auto j = json::parse(run({"--format", "json", "basis", "--n", "3"}).out);
    EXPECT_EQ(j["dimension"].get<int>(), static_cast<int>(cleaved::cleaved_basis(3).size()));
}

TEST(Cli, ZmapNestedArcs) {
    const auto r = run({"zmap", file("nested_arcs.pd")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Z(1) = q^(1/2) I_{A_+} + q^(-1/2) I_{A_-} + q I_{B_{++}} + I_{B_{+-}} + I_{B_{-+}} + "
                         "q^-1 I_{B_{--}}"),
              std::string::npos)
        << r.out;
}

TEST(Cli, BraidRepOfGenerator) {
    const auto r = run({"--format", "json", "braid-rep", "--strands", "2", "s1"});
    ASSERT_EQ(r.code, 0);
    const auto z = cleaved::json_io::partition_matrix_from_json(json::parse(r.out));
    EXPECT_EQ(z, cleaved::from_dense(1, {1}, {{Q::q(1) - Q::q(3), -Q::q(2)}, {-Q::q(2), Q()}}));
    EXPECT_EQ(run({"braid-rep", "--strands", "2", "s2"}).code, 2);
}

TEST(Cli, ValidateStrictReportsGenus) {
    const auto strict = run({"validate", "--strict", file("crossing.pd")});
    EXPECT_EQ(strict.code, 1);
    EXPECT_NE(strict.out.find("genus 1"), std::string::npos) << strict.out;
    EXPECT_EQ(run({"validate", file("crossing.pd")}).code, 0);
    EXPECT_EQ(run({"validate", "--strict", file("sigma.pd")}).code, 0);
}

TEST(Cli, ComposeMismatchNamesBothSignatures) {
    const auto r = run({"compose", file("sigma.pd"), "1", file("nested_arcs.pd")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("(2)"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("(1;1)"), std::string::npos) << r.err;
}

TEST(Cli, ComposeAgreesWithLibrary) {
    const auto r = run({"compose", file("sigma.pd"), "1", file("sigma.pd")});
    ASSERT_EQ(r.code, 0);
    const auto sigma = cleaved::load_tangle(file("sigma.pd"));
    EXPECT_EQ(r.out, cleaved::serialize(cleaved::compose(sigma, 1, sigma)));
}

TEST(Cli, Jones) {
    EXPECT_EQ(run({"jones", file("unknot.pd")}).out, "q + q^-1\n");
    EXPECT_EQ(run({"jones", file("sigma.pd")}).code, 1);
}

TEST(Cli, SkeinCheckAndMirror) {
    EXPECT_EQ(run({"skein-check", file("sigma.pd")}).code, 0);
    const auto m = run({"mirror", file("sigma.pd")});
    ASSERT_EQ(m.code, 0);
    EXPECT_EQ(cleaved::parse_tangle(m.out, "<mirror>"), cleaved::mirror(cleaved::load_tangle(file("sigma.pd"))));
}

TEST(Cli, PairingIsPermutation) {
    for (const char* n : {"0", "1", "2"}) {
        const auto r = run({"--format", "json", "pairing", "--n", n});
        ASSERT_EQ(r.code, 0);
        EXPECT_TRUE(json::parse(r.out)["permutation"].get<bool>());
    }
}

TEST(Cli, TlMatricesRoundTrip) {
    const auto r = run({"--format", "json", "tl-matrices", "--n", "2"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    const auto expected = cleaved::tl_generator_matrices(2);
    ASSERT_EQ(j["matrices"].size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const auto m = cleaved::json_io::ring_matrix_from_json(j["matrices"][k]);
        EXPECT_EQ(m, expected[k]);
        EXPECT_EQ(m.row_labels, expected[k].row_labels);
    }
}

TEST(Cli, TlKernelsAreVerified) {
    const auto r = run({"--format", "json", "tl-kernels", "--n", "2"});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    const auto ms = cleaved::tl_generator_matrices(2);
    std::vector<std::size_t> nullities;
    for (const auto& entry : j["kernels"]) nullities.push_back(entry["nullity"].get<std::size_t>());
    EXPECT_EQ(nullities, (std::vector<std::size_t>{10, 10, 10, 7}));
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (const auto& v : j["kernels"][k]["kernel"]) {
            const auto vec = cleaved::json_io::vector_from_json(v["coefficients"]);
            EXPECT_TRUE(cleaved::kernel_membership(ms[k], vec));
            EXPECT_EQ(cleaved::parse_combination(2, v["text"].get<std::string>()), vec);
        }
}

TEST(Cli, JsonRoundTripsPartitionMatrices) {
    for (const char* name : {"nested_arcs.pd", "adjacent_arcs.pd", "cupcap.pd", "pairing1.pd"}) {
        const auto r = run({"--format", "json", "zmap", file(name)});
        ASSERT_EQ(r.code, 0) << name;
        const auto z = cleaved::json_io::partition_matrix_from_json(json::parse(r.out));
        EXPECT_EQ(z, cleaved::partition_map(cleaved::load_planar(file(name)))) << name;
    }
    const auto t = run({"--format", "json", "ztangle", file("sigma.pd")});
    EXPECT_EQ(cleaved::json_io::partition_matrix_from_json(json::parse(t.out)),
              cleaved::partition_tangle(cleaved::load_tangle(file("sigma.pd"))));
}

TEST(Cli, JsonRoundTripsPolynomialsWithLargeCoefficients) {
    const Q p = Q::monomial(3, cleaved::Integer("123456789012345678901234567890")) - Q::q(-2);
    EXPECT_EQ(cleaved::json_io::polynomial_from_json(json::parse(cleaved::json_io::to_json(p).dump())), p);
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::vector<std::string>> commands{
        {"basis", "--n", "2"},
        {"--format", "json", "zmap", file("nested_arcs.pd")},
        {"braid-rep", "--strands", "4", "s1 s2^-1 s3"},
        {"tl-kernels", "--n", "2"},
        {"--format", "json", "ztangle", file("sigma.pd")}};
    for (const auto& c : commands) EXPECT_EQ(run(c).out, run(c).out);
}
