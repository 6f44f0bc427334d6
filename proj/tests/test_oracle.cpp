#include <gtest/gtest.h>

#include <cstdlib>

#include "sandpilion/errors.hpp"
#include "sandpilion/oracle.hpp"
#include "sandpilion/sandpile.hpp"

using namespace sandpilion;

namespace {

Multigraph doubled_edge() {
    Multigraph g({VertexLabel::path(1), VertexLabel::path(2)});
    g.add_edge(0, 1, 2);
    return g;
}

Multigraph triangle_with(int a, int b, int c) {
    Multigraph g({VertexLabel::path(1), VertexLabel::path(2), VertexLabel::path(3)});
    g.add_edge(0, 1, a);
    g.add_edge(1, 2, b);
    g.add_edge(0, 2, c);
    return g;
}

class BudgetGuard {
public:
    explicit BudgetGuard(const char* value) { setenv("SANDPILION_BUDGET", value, 1); }
    ~BudgetGuard() { unsetenv("SANDPILION_BUDGET"); }
};

}  // namespace

TEST(BruteForce, Examples) {
    const auto k3 = cone(build_path(2));
    EXPECT_EQ(brute_force_tau(k3), 3);
    EXPECT_EQ(brute_force_tau(cone(build_bicoconut({1, 1, 1}))), 8);
    EXPECT_EQ(brute_force_tau(cone_plus(build_coconut(2, 1), VertexLabel::path(1))), 13);
    EXPECT_EQ(brute_force_tau(doubled_edge()), 2);
    EXPECT_EQ(brute_force_tau(build_path(1)), 1);
}

TEST(BruteForce, SerialReferenceAgrees) {
    for (const auto& [name, t] : family_trees(7)) {
        const auto g = cone(t);
        EXPECT_EQ(brute_force_tau(g), brute_force_tau_serial(g)) << name;
    }
}

TEST(BruteForce, Errors) {
    Multigraph split({VertexLabel::path(1), VertexLabel::path(2)});
    EXPECT_THROW(brute_force_tau(split), DisconnectedGraph);
    EXPECT_THROW(deletion_contraction_tau(split), DisconnectedGraph);
    const auto big = cone(build_bicoconut({6, 4, 4}));  // 13 + 14 edges
    EXPECT_THROW(brute_force_tau(big), BudgetExceeded);
    EXPECT_THROW(deletion_contraction_tau(big), BudgetExceeded);
}

TEST(Budget, EnvironmentOverride) {
    EXPECT_EQ(enumeration_budget(), 24u);
    {
        BudgetGuard guard("4");
        EXPECT_EQ(enumeration_budget(), 4u);
        EXPECT_THROW(brute_force_tau(cone(build_bicoconut({1, 1, 1}))), BudgetExceeded);
        EXPECT_EQ(brute_force_tau(cone(build_path(2))), 3);
    }
    {
        BudgetGuard guard("lots");
        EXPECT_THROW(enumeration_budget(), InvalidArgument);
    }
}

TEST(DeletionContraction, Examples) {
    EXPECT_EQ(deletion_contraction_tau(cone(build_path(2))), 3);
    EXPECT_EQ(deletion_contraction_tau(doubled_edge()), 2);
    EXPECT_EQ(deletion_contraction_tau(cone(build_bicoconut({2, 1, 1}))), 21);
}

TEST(Multiplicity, ThreeVertexInstances) {
    // Spanning trees of a triangle with multiplicities a, b, c: ab + bc + ca.
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                const auto g = triangle_with(a, b, c);
                const BigInt expected = a * b + b * c + c * a;
                EXPECT_EQ(brute_force_tau(g), expected);
                EXPECT_EQ(brute_force_tau_serial(g), expected);
                EXPECT_EQ(deletion_contraction_tau(g), expected);
                EXPECT_EQ(tau(g), expected);
            }
}

TEST(FamilyTrees, Enumeration) {
    const auto trees = family_trees(5);
    for (const auto& [name, t] : trees) {
        EXPECT_TRUE(t.is_tree()) << name;
        EXPECT_LE(t.vertex_count(), 5u) << name;
    }
    // T: p+s1+s2 <= 5 gives 10, CT: p+s <= 5 gives 10, combs p = 2, 3.
    EXPECT_EQ(trees.size(), 22u);
}

TEST(OracleTriangle, FamilyGraphsUpToEightTreeVertices) {
    for (const auto& [name, t] : family_trees(7)) {
        std::vector<Multigraph> graphs{t, cone(t)};
        for (const auto& v : t.vertices()) graphs.push_back(cone_plus(t, v));
        for (const auto& g : graphs) {
            const auto det = tau(g);
            EXPECT_EQ(brute_force_tau(g), det) << name;
            EXPECT_EQ(deletion_contraction_tau(g), det) << name;
        }
    }
}

TEST(ConeDeletion, HoldsWithEveryOracle) {
    const TauFunction det = [](const Multigraph& g) { return tau(g); };
    const TauFunction dc = [](const Multigraph& g) { return deletion_contraction_tau(g); };
    for (const auto& [name, t] : family_trees(6))
        for (auto leaf : t.leaves()) {
            EXPECT_TRUE(check_cone_deletion(t, t.label(leaf), det).holds()) << name;
            EXPECT_TRUE(check_cone_deletion(t, t.label(leaf), dc).holds()) << name;
        }
}

TEST(ConeDeletion, DetectsAWrongTau) {
    const TauFunction off_by_one = [](const Multigraph& g) { return BigInt(tau(g) + (g.edge_count() % 2)); };
    const auto t = build_bicoconut({2, 1, 1});
    EXPECT_FALSE(check_cone_deletion(t, VertexLabel::left_leaf(1), off_by_one).holds());
}
