#include <gtest/gtest.h>

#include <algorithm>

#include "sandpilion/errors.hpp"
#include "sandpilion/graph.hpp"

using namespace sandpilion;

namespace {

int apex_degree(const Multigraph& g) { return g.degree(g.index_of(VertexLabel::apex())); }

}  // namespace

TEST(Labels, ShortNames) {
    EXPECT_EQ(to_string(VertexLabel::path(3)), "pi3");
    EXPECT_EQ(to_string(VertexLabel::left_leaf(2)), "s1_2");
    EXPECT_EQ(to_string(VertexLabel::right_leaf(1)), "s2_1");
    EXPECT_EQ(to_string(VertexLabel::comb_leaf(4)), "l4");
    EXPECT_EQ(to_string(VertexLabel::apex()), "v0");
    EXPECT_EQ(role_from_name("RightLeaf"), Role::RightLeaf);
    EXPECT_FALSE(role_from_name("Trunk").has_value());
}

TEST(Multigraph, RejectsSelfLoopsAndDuplicateLabels) {
    Multigraph g({VertexLabel::path(1), VertexLabel::path(2)});
    EXPECT_THROW(g.add_edge(0, 0), InvalidArgument);
    EXPECT_THROW(Multigraph({VertexLabel::path(1), VertexLabel::path(1)}), InvalidArgument);
    EXPECT_THROW(g.remove_edge(0, 1), InvalidArgument);
}

TEST(Multigraph, MultiplicityIsSymmetric) {
    Multigraph g({VertexLabel::path(1), VertexLabel::path(2), VertexLabel::path(3)});
    g.add_edge(0, 1, 2);
    g.add_edge(2, 1);
    EXPECT_EQ(g.multiplicity(1, 0), 2);
    EXPECT_EQ(g.degree(1), 3);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.edge_instances().size(), 3u);
    g.remove_edge(1, 0);
    EXPECT_EQ(g.multiplicity(0, 1), 1);
}

TEST(Bicoconut, Small) {
    const auto t = build_bicoconut({1, 1, 1});
    EXPECT_EQ(t.vertex_count(), 3u);
    EXPECT_EQ(t.edge_count(), 2u);
    EXPECT_TRUE(t.is_tree());
    EXPECT_EQ(t.degree(t.index_of(VertexLabel::path(1))), 2);
}

TEST(Bicoconut, FiveThreeFour) {
    const auto t = build_bicoconut({5, 3, 4});
    EXPECT_EQ(t.vertex_count(), 12u);
    EXPECT_EQ(t.edge_count(), 11u);
    EXPECT_EQ(t.degree(t.index_of(VertexLabel::path(1))), 4);
    EXPECT_EQ(t.degree(t.index_of(VertexLabel::path(5))), 5);
    EXPECT_EQ(t.leaves().size(), 7u);
}

TEST(Bicoconut, CanonicalOrder) {
    const auto t = build_bicoconut({2, 2, 1});
    const std::vector<VertexLabel> expected{VertexLabel::path(1), VertexLabel::path(2), VertexLabel::left_leaf(1),
                                            VertexLabel::left_leaf(2), VertexLabel::right_leaf(1)};
    EXPECT_EQ(t.vertices(), expected);
    EXPECT_THROW(build_bicoconut({0, 1, 1}), InvalidArgument);
    EXPECT_THROW(build_bicoconut({2, 0, 1}), InvalidArgument);
    EXPECT_TRUE(build_bicoconut_extended({3, 0, 0}).same_labeled_graph(build_path(3)));
}

TEST(Coconut, OneIsAStar) {
    const auto t = build_coconut(1, 3);
    EXPECT_EQ(t.vertex_count(), 4u);
    EXPECT_EQ(t.degree(0), 3);
}

TEST(Coconut, RelabelsToBicoconut) {
    // CT(p,s) with its free path end renamed as a left leaf is T(p-1, 1, s).
    for (int p = 2; p <= 6; ++p)
        for (int s = 1; s <= 4; ++s) {
            auto renamed = relabel(build_coconut(p, s), [](const VertexLabel& l) {
                if (l.role != Role::Path) return l;
                return l.index == 1 ? VertexLabel::left_leaf(1) : VertexLabel::path(l.index - 1);
            });
            EXPECT_TRUE(renamed.same_labeled_graph(build_bicoconut({p - 1, 1, s}))) << p << "," << s;
        }
}

TEST(LeftComb, Shape) {
    for (int p = 2; p <= 8; ++p) {
        const auto t = build_left_comb(p);
        EXPECT_EQ(t.vertex_count(), static_cast<std::size_t>(2 * p - 1));
        EXPECT_TRUE(t.is_tree());
        EXPECT_EQ(t.leaves().size(), static_cast<std::size_t>(p));
    }
    const auto t = build_left_comb(3);
    EXPECT_EQ(t.multiplicity(t.index_of(VertexLabel::comb_leaf(1)), t.index_of(VertexLabel::path(2))), 1);
    EXPECT_EQ(t.multiplicity(t.index_of(VertexLabel::comb_leaf(2)), t.index_of(VertexLabel::path(3))), 1);
    EXPECT_THROW(build_left_comb(1), InvalidArgument);
}

TEST(Cone, AddsApexLast) {
    const auto g = cone(build_bicoconut({2, 2, 2}));
    EXPECT_EQ(g.vertex_count(), 7u);
    EXPECT_EQ(g.edge_count(), 11u);
    EXPECT_EQ(g.vertices().back(), VertexLabel::apex());
    EXPECT_EQ(apex_degree(g), 6);
    EXPECT_THROW(cone(g), InvalidArgument);
}

TEST(Cone, PathOfTwoIsTriangle) {
    const auto g = cone(build_path(2));
    EXPECT_EQ(g.edge_count(), 3u);
    for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(ConePlus, DoublesOneApexEdge) {
    const auto g = cone_plus(build_path(2), VertexLabel::path(1));
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_EQ(g.multiplicity(0, 2), 2);

    const auto h = cone_plus(build_bicoconut({2, 1, 1}), VertexLabel::path(1));
    EXPECT_EQ(apex_degree(h), 5);
    EXPECT_EQ(h.edge_count(), 8u);

    Multigraph not_tree = cone(build_path(2));
    EXPECT_THROW(cone_plus(not_tree, VertexLabel::path(1)), InvalidArgument);
}

TEST(DeleteLeaf, LowersLeafCount) {
    const auto [t, v] = delete_leaf(build_bicoconut({2, 2, 2}), VertexLabel::left_leaf(2));
    EXPECT_TRUE(t.same_labeled_graph(build_bicoconut({2, 1, 2})));
    EXPECT_EQ(v, VertexLabel::path(1));
}

TEST(DeleteLeaf, PathAndComb) {
    const auto [p2, mid] = delete_leaf(build_path(3), VertexLabel::path(3));
    EXPECT_TRUE(p2.same_labeled_graph(build_path(2)));
    EXPECT_EQ(mid, VertexLabel::path(2));

    const auto [c, nb] = delete_leaf(build_left_comb(3), VertexLabel::comb_leaf(2));
    EXPECT_EQ(c.vertex_count(), 4u);
    EXPECT_TRUE(c.is_tree());
    EXPECT_EQ(nb, VertexLabel::path(3));
    EXPECT_THROW(delete_leaf(build_path(3), VertexLabel::path(2)), InvalidArgument);
}

TEST(DeleteLeaf, AttachRestoresEveryLeaf) {
    for (int p = 1; p <= 4; ++p)
        for (int s1 = 1; s1 <= 3; ++s1)
            for (int s2 = 1; s2 <= 3; ++s2) {
                const auto t = build_bicoconut({p, s1, s2});
                for (auto leaf : t.leaves()) {
                    const auto [rest, v] = delete_leaf(t, t.label(leaf));
                    EXPECT_TRUE(attach_leaf(rest, t.label(leaf), v).same_labeled_graph(t));
                }
            }
}

TEST(Reorder, KeepsLabelledGraph) {
    const auto g = cone(build_left_comb(4));
    std::vector<std::size_t> order(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
    const auto r = reorder(g, order);
    EXPECT_TRUE(r.same_labeled_graph(g));
    EXPECT_EQ(r.vertices().front(), VertexLabel::apex());
    std::vector<std::size_t> bad(order.size(), 0);
    EXPECT_THROW(reorder(g, bad), InvalidArgument);
}

TEST(Connectivity, Disconnected) {
    Multigraph g({VertexLabel::path(1), VertexLabel::path(2), VertexLabel::path(3)});
    g.add_edge(0, 1);
    EXPECT_FALSE(g.is_connected());
    EXPECT_FALSE(g.is_tree());
}
