#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "cleaved/cleaved_link.hpp"

using cleaved::CleavedLink;
using cleaved::NoncrossingMatching;
using cleaved::Sign;

namespace {

// Oracle for dim I_{2n}: components of the union of two matchings counted by
// union-find over every pair of noncrossing matchings.
std::uint64_t oracle_dimension(int n) {
    std::uint64_t total = 0;
    for (const auto& a : cleaved::enumerate_noncrossing(n)) {
        for (const auto& b : cleaved::enumerate_noncrossing(n)) {
            std::vector<int> parent(static_cast<std::size_t>(2 * n + 1));
            for (int p = 0; p <= 2 * n; ++p) parent[static_cast<std::size_t>(p)] = p;
            auto find = [&](int x) {
                while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
                return x;
            };
            int components = 2 * n;
            for (const auto* m : {&a, &b})
                for (auto [x, y] : m->pairs()) {
                    const int rx = find(x), ry = find(y);
                    if (rx != ry) {
                        parent[static_cast<std::size_t>(rx)] = ry;
                        --components;
                    }
                }
            total += std::uint64_t{1} << components;
        }
    }
    return total;
}

}  // namespace

TEST(Cleaved, BasisSizes) {
    EXPECT_EQ(cleaved::enumerate_cleaved(0).size(), 1u);
    EXPECT_EQ(cleaved::enumerate_cleaved(1).size(), 2u);
    EXPECT_EQ(cleaved::enumerate_cleaved(2).size(), 12u);
}

TEST(Cleaved, DimensionAgreesWithIndependentCount) {
    for (int n = 0; n <= 4; ++n) {
        EXPECT_EQ(cleaved::module_dimension(n), oracle_dimension(n)) << "n = " << n;
        EXPECT_EQ(cleaved::enumerate_cleaved(n).size(), oracle_dimension(n)) << "n = " << n;
    }
}

TEST(Cleaved, FrozenDimensionForSixPoints) {
    // Regression constant: exhaustive count for n = 3.
    EXPECT_EQ(oracle_dimension(3), 104u);
    EXPECT_EQ(cleaved::enumerate_cleaved(3).size(), 104u);
}

TEST(Cleaved, IndexOfIsABijection) {
    for (int n = 0; n <= 3; ++n) {
        const auto& basis = cleaved::cleaved_basis(n);
        for (std::size_t k = 0; k < basis.size(); ++k) ASSERT_EQ(basis.index_of(basis[k]), k);
    }
}

TEST(Cleaved, EnumerationOrder) {
    const auto& links = cleaved::enumerate_cleaved(2);
    for (std::size_t k = 1; k < links.size(); ++k) {
        const auto& a = links[k - 1];
        const auto& b = links[k];
        const auto ka = std::tie(a.inside, a.outside);
        const auto kb = std::tie(b.inside, b.outside);
        ASSERT_TRUE(ka < kb || (ka == kb && a.decorations < b.decorations));
    }
}

TEST(Cleaved, NamedLabelsFollowBasisOrder) {
    const std::vector<std::string> expected = {"C_{++}", "C_{-+}", "C_{+-}", "C_{--}", "D_+",    "D_-",
                                               "A_+",    "A_-",    "B_{++}", "B_{+-}", "B_{-+}", "B_{--}"};
    const auto& links = cleaved::enumerate_cleaved(2);
    ASSERT_EQ(links.size(), expected.size());
    for (std::size_t k = 0; k < links.size(); ++k) {
        EXPECT_EQ(cleaved::named_label(links[k]).value(), expected[k]);
        EXPECT_EQ(cleaved::link_from_label(expected[k]), links[k]);
    }
    EXPECT_EQ(cleaved::named_label(cleaved::enumerate_cleaved(0)[0]).value(), "I_0");
    EXPECT_EQ(cleaved::named_label(cleaved::enumerate_cleaved(1)[0]).value(), "I_+");
    EXPECT_EQ(cleaved::named_label(cleaved::enumerate_cleaved(1)[1]).value(), "I_-");
    EXPECT_FALSE(cleaved::named_label(cleaved::enumerate_cleaved(3)[0]).has_value());
}

TEST(Cleaved, BLabelSubscriptsFollowCycleOrder) {
    // B_{+-}: the circle through point 1 is +, the circle through point 2 is -.
    const auto b = cleaved::link_from_label("B_{+-}");
    const auto cycles = cleaved::trace_cycles(b.inside, b.outside);
    EXPECT_EQ(b.decorations[static_cast<std::size_t>(cycles.cycle_of[1])], Sign::Plus);
    EXPECT_EQ(b.decorations[static_cast<std::size_t>(cycles.cycle_of[2])], Sign::Minus);
}

TEST(Cleaved, MakeRejectsWrongDecorationCount) {
    const auto m = NoncrossingMatching::parse("1-2");
    EXPECT_THROW(CleavedLink::make(m, m, {}), std::invalid_argument);
    EXPECT_THROW(CleavedLink::make(m, NoncrossingMatching::parse("1-2,3-4"), {Sign::Plus}), std::invalid_argument);
}

TEST(Cleaved, ConjugateExamples) {
    EXPECT_EQ(cleaved::conjugate_link(cleaved::link_from_label("I_+")), cleaved::link_from_label("I_-"));
    EXPECT_EQ(cleaved::conjugate_link(cleaved::link_from_label("B_{+-}")), cleaved::link_from_label("B_{-+}"));
    const auto empty = cleaved::enumerate_cleaved(0)[0];
    EXPECT_EQ(cleaved::conjugate_link(empty), empty);
}

TEST(Cleaved, DualExamples) {
    EXPECT_EQ(cleaved::dual_link(cleaved::link_from_label("I_+")), cleaved::link_from_label("I_+"));
    EXPECT_EQ(cleaved::dual_link(cleaved::link_from_label("I_-")), cleaved::link_from_label("I_-"));
    const auto empty = cleaved::enumerate_cleaved(0)[0];
    EXPECT_EQ(cleaved::dual_link(empty), empty);
}

TEST(Cleaved, InvolutionsCommute) {
    for (int n = 0; n <= 3; ++n) {
        for (const auto& l : cleaved::enumerate_cleaved(n)) {
            ASSERT_EQ(cleaved::conjugate_link(cleaved::conjugate_link(l)), l);
            ASSERT_EQ(cleaved::dual_link(cleaved::dual_link(l)), l);
            ASSERT_EQ(cleaved::conjugate_link(cleaved::dual_link(l)), cleaved::dual_link(cleaved::conjugate_link(l)));
        }
    }
}

TEST(Cleaved, DualIsAPermutation) {
    for (int n = 0; n <= 3; ++n) {
        std::set<std::size_t> image;
        const auto& basis = cleaved::cleaved_basis(n);
        for (const auto& l : basis.links()) image.insert(basis.index_of(cleaved::dual_link(l)));
        EXPECT_EQ(image.size(), basis.size());
    }
}

TEST(Cleaved, TextForm) {
    EXPECT_EQ(cleaved::link_from_label("A_-").to_string(), "in=1-4,2-3; out=1-2,3-4; dec=-");
}
