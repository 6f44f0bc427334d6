#include <gtest/gtest.h>

#include "sandpilion/errors.hpp"
#include "sandpilion/linalg.hpp"
#include "sandpilion/sandpile.hpp"

using namespace sandpilion;

namespace {

AbelianGroup cyclic_sum(std::vector<BigInt> orders) { return AbelianGroup::from_cyclic_orders(orders); }

}  // namespace

TEST(AbelianGroup, NormalisesCyclicOrders) {
    const auto g = cyclic_sum({4, 6});
    EXPECT_EQ(g.factors(), (std::vector<BigInt>{2, 12}));
    EXPECT_EQ(g.order(), 24);
    EXPECT_EQ(g.mu(), 2u);
    EXPECT_EQ(cyclic_sum({2, 3}).factors(), std::vector<BigInt>{6});
    EXPECT_TRUE(cyclic_sum({1, 1}).cyclic());
    EXPECT_EQ(to_string(cyclic_sum({1})), "0");
    EXPECT_EQ(to_string(cyclic_sum({2, 2, 84})), "Z_2 + Z_2 + Z_84");
}

TEST(AbelianGroup, RejectsBrokenChains) {
    const std::vector<BigInt> broken{4, 6};
    EXPECT_THROW(AbelianGroup::from_invariant_factors(broken), InvalidArgument);
    const std::vector<BigInt> zero{0};
    EXPECT_THROW(AbelianGroup::from_cyclic_orders(zero), InvalidArgument);
}

TEST(Laplacian, Triangle) {
    const auto l = laplacian(cone(build_path(2)));
    EXPECT_EQ(l, (IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
}

TEST(Laplacian, DoubledEdge) {
    const auto l = laplacian(cone_plus(build_path(2), VertexLabel::path(1)));
    EXPECT_EQ(l(0, 2), -2);
    EXPECT_EQ(l(0, 0), 3);
    EXPECT_EQ(l(2, 2), 3);
}

TEST(Laplacian, RowsSumToZero) {
    for (int p = 1; p <= 5; ++p) {
        const auto l = laplacian(cone(build_bicoconut({p, 2, 3})));
        for (std::size_t r = 0; r < l.rows(); ++r) {
            BigInt sum = 0;
            for (std::size_t c = 0; c < l.cols(); ++c) sum += l(r, c);
            EXPECT_EQ(sum, 0);
        }
    }
}

TEST(ReducedLaplacian, Cone111) {
    const auto l = reduced_laplacian(cone(build_bicoconut({1, 1, 1})), VertexLabel::apex());
    EXPECT_EQ(l, (IntMatrix{{3, -1, -1}, {-1, 2, 0}, {-1, 0, 2}}));
    EXPECT_EQ(reduction_vertex(build_path(3)), VertexLabel::path(3));
}

TEST(Tau, Examples) {
    EXPECT_EQ(tau(cone(build_path(2))), 3);
    EXPECT_EQ(tau(cone(build_bicoconut({1, 1, 1}))), 8);
    EXPECT_EQ(tau(cone(build_bicoconut({2, 1, 1}))), 21);
    EXPECT_EQ(tau(cone(build_bicoconut({2, 2, 2}))), 128);
    EXPECT_EQ(tau(cone(build_bicoconut({4, 1, 1}))), 144);
    EXPECT_EQ(tau(build_left_comb(4)), 1);
}

TEST(Tau, IndependentOfReductionVertex) {
    const auto g = cone(build_bicoconut({3, 2, 1}));
    const auto expected = tau(g);
    for (const auto& v : g.vertices()) EXPECT_EQ(determinant(reduced_laplacian(g, v)), expected);
}

TEST(Tau, Disconnected) {
    Multigraph g({VertexLabel::path(1), VertexLabel::path(2)});
    EXPECT_THROW(tau(g), DisconnectedGraph);
    EXPECT_THROW(sandpile_group(g), DisconnectedGraph);
}

TEST(SandpileGroup, Examples) {
    EXPECT_EQ(sandpile_group(cone(build_path(2))).factors(), std::vector<BigInt>{3});
    EXPECT_EQ(sandpile_group(cone(build_bicoconut({2, 2, 2}))).factors(), (std::vector<BigInt>{4, 32}));
    EXPECT_EQ(sandpile_group(cone(build_bicoconut({2, 1, 2}))).factors(), std::vector<BigInt>{52});
    EXPECT_EQ(mu(cone(build_bicoconut({1, 3, 3}))), 5u);
    EXPECT_EQ(mu(build_path(5)), 0u);
}

TEST(SandpileGroup, OrderIsTau) {
    for (int p = 1; p <= 5; ++p)
        for (int s1 = 1; s1 <= 3; ++s1)
            for (int s2 = 1; s2 <= 3; ++s2) {
                const auto g = cone(build_bicoconut({p, s1, s2}));
                EXPECT_EQ(sandpile_group(g).order(), tau(g));
            }
}

TEST(LeafGenerators, SmallTrees) {
    EXPECT_TRUE(check_leaf_generators(build_path(2), VertexLabel::path(1)));
    EXPECT_TRUE(check_leaf_generators(build_path(2), VertexLabel::path(2)));
    const auto t = build_bicoconut({2, 2, 2});
    for (auto leaf : t.leaves()) EXPECT_TRUE(check_leaf_generators(t, t.label(leaf)));
    EXPECT_THROW(check_leaf_generators(t, VertexLabel::path(1)), InvalidArgument);
}

TEST(LeafGenerators, NonCyclicGroup) {
    // mu = 5 here, and exactly five leaves remain after omitting one.
    EXPECT_EQ(mu(cone(build_bicoconut({1, 3, 3}))), 5u);
    EXPECT_TRUE(check_leaf_generators(build_bicoconut({1, 3, 3}), VertexLabel::left_leaf(1)));
    EXPECT_TRUE(check_leaf_generators(build_path(3), VertexLabel::path(1)));
}

TEST(CombClaims, SmallCases) {
    const auto c2 = comb_claims(2);
    EXPECT_TRUE(c2.claim1_minor_is_odd());
    EXPECT_EQ(c2.claim2_minor, 1);
    for (int p = 2; p <= 10; ++p) {
        const auto c = comb_claims(p);
        EXPECT_TRUE(c.claim1_minor_is_odd()) << p;
        EXPECT_EQ(abs_value(c.claim2_minor), pow2(static_cast<unsigned long>(p - 2))) << p;
        EXPECT_EQ(gcd_of(c.claim1_minor, c.claim2_minor), 1);
    }
    EXPECT_THROW(comb_claims(1), InvalidArgument);
}

TEST(CombGroups, Cyclic) {
    EXPECT_EQ(sandpile_group(cone(build_left_comb(2))).factors(), std::vector<BigInt>{8});
    EXPECT_EQ(sandpile_group(cone(build_left_comb(3))).factors(), std::vector<BigInt>{52});
    EXPECT_EQ(sandpile_group(cone(build_left_comb(4))).factors(), std::vector<BigInt>{332});
}
