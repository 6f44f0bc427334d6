#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sandpilion {

enum class Role { ConeApex, Path, LeftLeaf, RightLeaf, CombLeaf };

/// A vertex identity: its role in the family plus a 1-based index within that role.
/// The cone apex carries index 0.
struct VertexLabel {
    Role role = Role::Path;
    int index = 0;

    static VertexLabel apex() { return {Role::ConeApex, 0}; }
    static VertexLabel path(int i) { return {Role::Path, i}; }
    static VertexLabel left_leaf(int i) { return {Role::LeftLeaf, i}; }
    static VertexLabel right_leaf(int i) { return {Role::RightLeaf, i}; }
    static VertexLabel comb_leaf(int i) { return {Role::CombLeaf, i}; }

    auto operator<=>(const VertexLabel&) const = default;
};

std::string role_name(Role role);
std::optional<Role> role_from_name(const std::string& name);

/// Short human-readable name: pi3, s1_2, s2_1, l4, v0.
std::string to_string(const VertexLabel& label);

/// Parameters of the bi-coconut tree T(p, s1, s2).
struct FamilyParams {
    int p = 1;
    int s1 = 1;
    int s2 = 1;

    auto operator<=>(const FamilyParams&) const = default;
};

/// Undirected multigraph without self-loops. Edge multiplicities live in a dense
/// symmetric table indexed by vertex position; vertex order is the storage order,
/// which fixes Laplacian row/column order.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::vector<VertexLabel> vertices);

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<VertexLabel>& vertices() const { return labels_; }
    const VertexLabel& label(std::size_t v) const { return labels_.at(v); }

    std::optional<std::size_t> find(const VertexLabel& label) const;
    /// Throws InvalidArgument when the label is absent.
    std::size_t index_of(const VertexLabel& label) const;
    bool contains(const VertexLabel& label) const { return find(label).has_value(); }

    int multiplicity(std::size_t u, std::size_t v) const { return mult_[u * labels_.size() + v]; }
    void add_edge(std::size_t u, std::size_t v, int count = 1);
    void remove_edge(std::size_t u, std::size_t v, int count = 1);

    int degree(std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    /// Total number of edge instances, parallel copies counted separately.
    std::size_t edge_count() const;
    /// Edge instances as (u, v) pairs with u < v, each parallel copy listed once.
    std::vector<std::pair<std::size_t, std::size_t>> edge_instances() const;

    bool is_connected() const;
    bool is_tree() const;
    bool has_apex() const;
    std::vector<std::size_t> leaves() const;

    /// Same labels and same multiplicity between every pair of labels, regardless of storage order.
    bool same_labeled_graph(const Multigraph& other) const;

private:
    std::vector<VertexLabel> labels_;
    std::vector<int> mult_;
};

Multigraph build_bicoconut(const FamilyParams& params);
/// Zero leaf counts are allowed here: T(p, 0, s2) is a coconut, T(p, 0, 0) a bare path.
Multigraph build_bicoconut_extended(const FamilyParams& params);
Multigraph build_coconut(int p, int s);
Multigraph build_left_comb(int p);
Multigraph build_path(int n);

Multigraph cone(const Multigraph& g);
Multigraph cone_plus(const Multigraph& g, const VertexLabel& v);

struct LeafDeletion {
    Multigraph tree;
    VertexLabel neighbor;
};
LeafDeletion delete_leaf(const Multigraph& t, const VertexLabel& leaf);
/// Inverse of delete_leaf: append `leaf` as a new vertex joined once to `neighbor`.
Multigraph attach_leaf(const Multigraph& t, const VertexLabel& leaf, const VertexLabel& neighbor);

Multigraph relabel(const Multigraph& g, const std::function<VertexLabel(const VertexLabel&)>& map);
/// Storage reorder: vertex i of the result is vertex order[i] of g.
Multigraph reorder(const Multigraph& g, std::span<const std::size_t> order);

}  // namespace sandpilion
