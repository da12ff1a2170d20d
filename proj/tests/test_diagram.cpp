#include <gtest/gtest.h>

#include <string>

#include "cleaved/diagram.hpp"
#include "cleaved/diagram_io.hpp"
#include "support/generators.hpp"

using cleaved::Endpoint;
using cleaved::PlanarDiagram;
using cleaved::TangleDiagram;
using cleaved::Violation;

namespace {

PlanarDiagram diagram(std::vector<int> half_counts, std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arcs,
                      int circles = 0) {
    PlanarDiagram p;
    p.half_counts = std::move(half_counts);
    for (auto [a, b] : arcs) p.arcs.emplace_back(Endpoint::boundary(a.first, a.second), Endpoint::boundary(b.first, b.second));
    p.free_circles = circles;
    return p;
}

bool has_violation(const cleaved::ValidationReport& r, Violation::Kind k) {
    for (const auto& v : r.violations)
        if (v.kind == k) return true;
    return false;
}

std::string file(const std::string& name) { return std::string(CLEAVED_DIAGRAM_DIR) + "/" + name; }

}  // namespace

TEST(Validate, SingleArc) {
    EXPECT_TRUE(cleaved::validate(cleaved::cap_diagram(), true).ok());
}

TEST(Validate, InterleavedChordsHavePositiveGenus) {
    const auto p = diagram({2}, {{{0, 1}, {0, 3}}, {{0, 2}, {0, 4}}});
    EXPECT_TRUE(cleaved::validate(p, false).ok());
    const auto strict = cleaved::validate(p, true);
    EXPECT_TRUE(has_violation(strict, Violation::Kind::Genus));
}

TEST(Validate, StandardDiagramsAreStrictlyPlanar) {
    for (int n = 0; n <= 3; ++n) {
        EXPECT_TRUE(cleaved::validate(cleaved::pairing_diagram(n), true).ok()) << n;
        EXPECT_TRUE(cleaved::validate(cleaved::identity_diagram(n), true).ok()) << n;
    }
    for (int j = 1; j <= 3; ++j) EXPECT_TRUE(cleaved::validate(cleaved::annular_tl_generator(2, j), true).ok());
    EXPECT_TRUE(cleaved::validate(cleaved::cup_diagram(), true).ok());
    for (const auto& m : cleaved::enumerate_noncrossing(3))
        EXPECT_TRUE(cleaved::validate(cleaved::matching_diagram(m), true).ok());
}

TEST(Validate, ReversedPairingIsNotPlanar) {
    // Joining point k to point k of the other disc twists the bundle.
    const auto p = diagram({0, 2, 2}, {{{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}, {{1, 3}, {2, 3}}, {{1, 4}, {2, 4}}});
    EXPECT_TRUE(has_violation(cleaved::validate(p, true), Violation::Kind::Genus));
}

TEST(Validate, ArcThroughADiscInteriorIsRejected) {
    // Inner radial arcs of an annulus drawn in the wrong cyclic order.
    const auto p = diagram({2, 2}, {{{1, 1}, {0, 2}}, {{1, 2}, {0, 1}}, {{1, 3}, {0, 4}}, {{1, 4}, {0, 3}}});
    EXPECT_FALSE(cleaved::validate(p, true).ok());
}

TEST(Validate, WellFormednessErrors) {
    EXPECT_TRUE(has_violation(cleaved::validate(diagram({1}, {}), false), Violation::Kind::Dangling));
    EXPECT_TRUE(has_violation(cleaved::validate(diagram({1}, {{{0, 1}, {0, 2}}, {{0, 1}, {0, 2}}}), false),
                              Violation::Kind::Reused));
    EXPECT_TRUE(has_violation(cleaved::validate(diagram({1}, {{{0, 1}, {0, 3}}}), false), Violation::Kind::OutOfRange));
    EXPECT_TRUE(has_violation(cleaved::validate(diagram({1}, {{{0, 1}, {0, 1}}}), false), Violation::Kind::DegenerateArc));
    EXPECT_TRUE(has_violation(cleaved::validate(diagram({1}, {{{0, 1}, {1, 1}}}), false), Violation::Kind::OutOfRange));
}

TEST(Validate, OrientationConflictIsReported) {
    TangleDiagram t;
    t.half_counts = {0};
    t.crossings.push_back({true, cleaved::StrandDir::Forward, cleaved::StrandDir::Backward});
    // Port 2 feeds back into port 1 and port 3 into port 0: one closed strand
    // running 0 -> 2 -> 1 -> 3 -> 0 through both strands of the crossing.
    t.arcs = {{Endpoint::port(0, 2), Endpoint::port(0, 1)}, {Endpoint::port(0, 3), Endpoint::port(0, 0)}};
    EXPECT_TRUE(has_violation(cleaved::validate(t, false), Violation::Kind::Orientation));
    t.crossings[0].dir13 = cleaved::StrandDir::Forward;
    EXPECT_FALSE(has_violation(cleaved::validate(t, false), Violation::Kind::Orientation));
}

TEST(Compose, CapIntoCupGivesCupCap) {
    const auto r = cleaved::add_trivial_boundary(cleaved::cap_diagram());
    const auto t = cleaved::compose(r, 1, cleaved::cup_diagram());
    EXPECT_EQ(t.half_counts, (std::vector<int>{1, 1}));
    EXPECT_EQ(t, cleaved::annular_tl_generator(1, 1));
    EXPECT_EQ(t, cleaved::load_planar(file("cupcap.pd")));
}

TEST(Compose, IdentityLaws) {
    cleaved::testing::Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        const auto sig = cleaved::testing::random_signature(rng, 3, 3);
        const auto p = cleaved::testing::random_planar(rng, sig, cleaved::testing::uniform(rng, 0, 1));
        for (std::size_t i = 1; i < sig.size(); ++i)
            ASSERT_EQ(cleaved::compose(p, static_cast<int>(i), cleaved::identity_diagram(sig[i])), p);
        auto outer = cleaved::identity_diagram(sig[0]);
        ASSERT_EQ(cleaved::compose(outer, 1, p), p);
    }
}

TEST(Compose, ClosedChainBecomesFreeCircle) {
    const auto r = cleaved::annular_tl_generator(1, 1);
    const auto c = cleaved::compose_with_trace(cleaved::to_tangle(r), 1, cleaved::to_tangle(cleaved::cap_diagram()));
    EXPECT_EQ(c.diagram.free_circles, 1);
    EXPECT_EQ(c.closed_chain_points, (std::vector<int>{1}));
    EXPECT_EQ(cleaved::to_planar(c.diagram), diagram({1}, {{{0, 1}, {0, 2}}}, 1));
}

TEST(Compose, SignatureMismatchNamesBoth) {
    try {
        (void)cleaved::compose(cleaved::identity_diagram(2), 1, cleaved::cap_diagram());
        FAIL() << "expected a signature mismatch";
    } catch (const cleaved::SignatureMismatch& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("(1)"), std::string::npos) << what;
        EXPECT_NE(what.find("(2;2)"), std::string::npos) << what;
    }
    EXPECT_THROW((void)cleaved::compose(cleaved::cap_diagram(), 1, cleaved::cap_diagram()), cleaved::SignatureMismatch);
}

TEST(Compose, BoundaryOrderingRule) {
    PlanarDiagram r;
    r.half_counts = {0, 1, 0, 2};
    r.arcs = {{Endpoint::boundary(1, 1), Endpoint::boundary(3, 1)},
              {Endpoint::boundary(1, 2), Endpoint::boundary(3, 4)},
              {Endpoint::boundary(3, 2), Endpoint::boundary(3, 3)}};
    PlanarDiagram t;
    t.half_counts = {0, 0, 0};
    const auto c = cleaved::compose(r, 2, t);
    EXPECT_EQ(c.half_counts, (std::vector<int>{0, 1, 0, 0, 2}));
    EXPECT_EQ(c.arcs[0].second, Endpoint::boundary(4, 1));
}

TEST(Compose, RandomAssociativityAndPlanarity) {
    cleaved::testing::Rng rng(12);
    for (int k = 0; k < 200; ++k) {
        auto sig_a = cleaved::testing::random_signature(rng, 3, 3);
        if (sig_a.size() < 2) sig_a.push_back(cleaved::testing::uniform(rng, 0, 3));
        const int i = cleaved::testing::uniform(rng, 1, static_cast<int>(sig_a.size()) - 1);
        auto sig_b = cleaved::testing::random_signature(rng, 2, 3);
        sig_b[0] = sig_a[static_cast<std::size_t>(i)];
        if (sig_b.size() < 2) sig_b.push_back(cleaved::testing::uniform(rng, 0, 3));
        const int j = cleaved::testing::uniform(rng, 1, static_cast<int>(sig_b.size()) - 1);
        auto sig_c = cleaved::testing::random_signature(rng, 2, 3);
        sig_c[0] = sig_b[static_cast<std::size_t>(j)];

        const auto a = cleaved::testing::random_planar(rng, sig_a);
        const auto b = cleaved::testing::random_planar(rng, sig_b);
        const auto c = cleaved::testing::random_planar(rng, sig_c);
        ASSERT_TRUE(cleaved::validate(a, true).ok()) << cleaved::serialize(a);
        ASSERT_TRUE(cleaved::validate(b, true).ok()) << cleaved::serialize(b);
        const auto ab = cleaved::compose(a, i, b);
        ASSERT_TRUE(cleaved::validate(ab, true).ok()) << cleaved::serialize(ab);
        const auto left = cleaved::compose(ab, i + j - 1, c);
        const auto right = cleaved::compose(a, i, cleaved::compose(b, j, c));
        ASSERT_EQ(left, right);
        ASSERT_TRUE(cleaved::validate(left, true).ok());
    }
}

TEST(Compose, RandomTanglesStayPlanar) {
    cleaved::testing::Rng rng(13);
    for (int k = 0; k < 200; ++k) {
        const auto sig = cleaved::testing::random_signature(rng, 3, 3);
        const auto t = cleaved::testing::random_tangle(rng, {sig, cleaved::testing::uniform(rng, 0, 4), 0});
        ASSERT_TRUE(cleaved::validate(t, true).ok()) << cleaved::serialize(t);
    }
}

TEST(DropTrivialBoundary, Examples) {
    auto p = cleaved::pairing_diagram(1);
    p.half_counts.insert(p.half_counts.begin() + 1, 0);
    for (auto& [a, b] : p.arcs) {
        ++a.index;
        ++b.index;
    }
    ASSERT_TRUE(cleaved::validate(p, true).ok());
    EXPECT_EQ(cleaved::drop_trivial_boundary(p, 1), cleaved::pairing_diagram(1));

    const auto circles = diagram({0, 0}, {}, 3);
    EXPECT_EQ(cleaved::drop_trivial_boundary(circles, 1), diagram({0}, {}, 3));
    EXPECT_THROW((void)cleaved::drop_trivial_boundary(diagram({0}, {}, 1), 0), cleaved::DiagramError);
    EXPECT_THROW((void)cleaved::drop_trivial_boundary(cleaved::identity_diagram(1), 1), cleaved::DiagramError);
}

TEST(Format, ParsesPairingExample) {
    const auto p = cleaved::parse_planar("boundaries 0,1,1\narc 1:1-2:1\narc 1:2-2:2\ncircles 0");
    EXPECT_EQ(p.half_counts, (std::vector<int>{0, 1, 1}));
    EXPECT_EQ(p.arcs.size(), 2u);
    EXPECT_TRUE(cleaved::validate(p, true).ok());
    EXPECT_EQ(cleaved::load_planar(file("pairing1.pd")), cleaved::pairing_diagram(1));
}

TEST(Format, RoundTrip) {
    const std::string text = "boundaries 2\narc 0:1-0:4\narc 0:2-0:3\ncircles 0\n";
    EXPECT_EQ(cleaved::serialize(cleaved::parse_planar(text)), text);
    const auto t = cleaved::load_tangle(file("sigma.pd"));
    EXPECT_EQ(cleaved::parse_tangle(cleaved::serialize(t)), t);
    cleaved::testing::Rng rng(14);
    for (int k = 0; k < 100; ++k) {
        const auto sig = cleaved::testing::random_signature(rng, 3, 3);
        auto r = cleaved::testing::random_tangle(rng, {sig, cleaved::testing::uniform(rng, 0, 3), 2});
        r = cleaved::testing::random_orientation(rng, r);
        const auto s = cleaved::serialize(r);
        ASSERT_EQ(cleaved::parse_tangle(s), r) << s;
        ASSERT_EQ(cleaved::serialize(cleaved::parse_tangle(s)), s);
    }
}

TEST(Format, OutOfRangePointReportsPosition) {
    try {
        (void)cleaved::parse_planar("boundaries 0,1\narc 1:3-1:1\n", "bad.pd");
        FAIL() << "expected a parse error";
    } catch (const cleaved::ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_GT(e.column(), 1);
        EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
        EXPECT_EQ(std::string(e.what()).rfind("bad.pd:2:", 0), 0u);
    }
}

TEST(Format, SyntaxErrors) {
    EXPECT_THROW((void)cleaved::parse_planar("arc 0:1-0:2\n"), cleaved::ParseError);
    EXPECT_THROW((void)cleaved::parse_planar("boundaries 1\nfoo 3\n"), cleaved::ParseError);
    EXPECT_THROW((void)cleaved::parse_planar("boundaries 1\narc 0:1 0:2\n"), cleaved::ParseError);
    EXPECT_THROW((void)cleaved::parse_planar("boundaries 1\narc 0:1-0:2 extra\n"), cleaved::ParseError);
    EXPECT_THROW((void)cleaved::parse_tangle("boundaries 0\narc x0:1-x0:2\n"), cleaved::ParseError);
    EXPECT_THROW((void)cleaved::parse_tangle("boundaries 0\ncrossing 0 over=12\n"), cleaved::ParseError);
    EXPECT_THROW((void)cleaved::parse_planar("boundaries 0\ncrossing 0 over=02\n"), cleaved::ParseError);
}

TEST(Format, CommentsAndBlankLines) {
    const auto p = cleaved::parse_planar("# header\n\nboundaries 1  # one arc\n  arc 0:1-0:2\n");
    EXPECT_EQ(p, cleaved::cap_diagram());
    EXPECT_EQ(p.free_circles, 0);
}

TEST(Format, OrientationForms) {
    const auto a = cleaved::parse_tangle(
        "boundaries 0\ncrossing 0 over=02\narc x0:2-x0:1\narc x0:3-x0:0\norient x0:2 -> x0:1\n");
    // Leaving port 2 and entering port 1 fixes both strands.
    EXPECT_EQ(a.crossings[0].dir02, cleaved::StrandDir::Forward);
    EXPECT_EQ(a.crossings[0].dir13, cleaved::StrandDir::Forward);
    const auto b = cleaved::parse_tangle(
        "boundaries 0\ncrossing 0 over=02\narc x0:2-x0:1\narc x0:3-x0:0\norient x0:1 -> x0:3\n");
    EXPECT_EQ(b.crossings[0].dir13, cleaved::StrandDir::Forward);
}
