#include "sandpilion/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sandpilion/errors.hpp"

namespace sandpilion {

std::string role_name(Role role) {
    switch (role) {
        case Role::ConeApex: return "ConeApex";
        case Role::Path: return "Path";
        case Role::LeftLeaf: return "LeftLeaf";
        case Role::RightLeaf: return "RightLeaf";
        case Role::CombLeaf: return "CombLeaf";
    }
    return "Unknown";
}

std::optional<Role> role_from_name(const std::string& name) {
    for (Role r : {Role::ConeApex, Role::Path, Role::LeftLeaf, Role::RightLeaf, Role::CombLeaf}) {
        if (role_name(r) == name) return r;
    }
    return std::nullopt;
}

std::string to_string(const VertexLabel& label) {
    const auto i = std::to_string(label.index);
    switch (label.role) {
        case Role::ConeApex: return "v0";
        case Role::Path: return "pi" + i;
        case Role::LeftLeaf: return "s1_" + i;
        case Role::RightLeaf: return "s2_" + i;
        case Role::CombLeaf: return "l" + i;
    }
    return "?";
}

Multigraph::Multigraph(std::vector<VertexLabel> vertices)
    : labels_(std::move(vertices)), mult_(labels_.size() * labels_.size(), 0) {
    std::set<VertexLabel> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw InvalidArgument("duplicate vertex label");
    const auto apexes = std::count_if(labels_.begin(), labels_.end(),
                                      [](const VertexLabel& l) { return l.role == Role::ConeApex; });
    if (apexes > 1) throw InvalidArgument("more than one cone apex");
}

std::optional<std::size_t> Multigraph::find(const VertexLabel& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Multigraph::index_of(const VertexLabel& label) const {
    auto v = find(label);
    if (!v) throw InvalidArgument("vertex " + to_string(label) + " not in graph");
    return *v;
}

void Multigraph::add_edge(std::size_t u, std::size_t v, int count) {
    const auto n = labels_.size();
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loops are not allowed");
    if (count < 0) throw InvalidArgument("negative edge multiplicity");
    mult_[u * n + v] += count;
    mult_[v * n + u] += count;
}

void Multigraph::remove_edge(std::size_t u, std::size_t v, int count) {
    const auto n = labels_.size();
    if (u >= n || v >= n || u == v) throw InvalidArgument("bad edge");
    if (mult_[u * n + v] < count) throw InvalidArgument("removing more copies than present");
    mult_[u * n + v] -= count;
    mult_[v * n + u] -= count;
}

int Multigraph::degree(std::size_t v) const {
    const auto n = labels_.size();
    int d = 0;
    for (std::size_t u = 0; u < n; ++u) d += mult_[v * n + u];
    return d;
}

std::vector<std::size_t> Multigraph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < labels_.size(); ++u)
        if (multiplicity(v, u) > 0) out.push_back(u);
    return out;
}

std::size_t Multigraph::edge_count() const {
    std::size_t total = 0;
    for (int m : mult_) total += static_cast<std::size_t>(m);
    return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Multigraph::edge_instances() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto n = labels_.size();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            for (int k = 0; k < multiplicity(u, v); ++k) out.emplace_back(u, v);
    return out;
}

bool Multigraph::is_connected() const {
    const auto n = labels_.size();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (std::size_t u = 0; u < n; ++u) {
            if (!seen[u] && multiplicity(v, u) > 0) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

bool Multigraph::is_tree() const {
    return !labels_.empty() && edge_count() + 1 == labels_.size() && is_connected();
}

bool Multigraph::has_apex() const {
    return std::any_of(labels_.begin(), labels_.end(),
                       [](const VertexLabel& l) { return l.role == Role::ConeApex; });
}

std::vector<std::size_t> Multigraph::leaves() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

bool Multigraph::same_labeled_graph(const Multigraph& other) const {
    if (vertex_count() != other.vertex_count()) return false;
    std::vector<std::size_t> map(vertex_count());
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        auto w = other.find(labels_[v]);
        if (!w) return false;
        map[v] = *w;
    }
    for (std::size_t u = 0; u < vertex_count(); ++u)
        for (std::size_t v = 0; v < vertex_count(); ++v)
            if (multiplicity(u, v) != other.multiplicity(map[u], map[v])) return false;
    return true;
}

namespace {

Multigraph bicoconut_unchecked(const FamilyParams& params) {
    const auto [p, s1, s2] = params;
    std::vector<VertexLabel> labels;
    for (int i = 1; i <= p; ++i) labels.push_back(VertexLabel::path(i));
    for (int i = 1; i <= s1; ++i) labels.push_back(VertexLabel::left_leaf(i));
    for (int j = 1; j <= s2; ++j) labels.push_back(VertexLabel::right_leaf(j));
    Multigraph g(std::move(labels));
    const auto first = std::size_t{0};
    const auto last = static_cast<std::size_t>(p - 1);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(p); ++i) g.add_edge(i, i + 1);
    for (int i = 0; i < s1; ++i) g.add_edge(first, static_cast<std::size_t>(p + i));
    for (int j = 0; j < s2; ++j) g.add_edge(last, static_cast<std::size_t>(p + s1 + j));
    return g;
}

}  // namespace

Multigraph build_bicoconut(const FamilyParams& params) {
    if (params.p < 1 || params.s1 < 1 || params.s2 < 1)
        throw InvalidArgument("bi-coconut tree needs p, s1, s2 >= 1");
    return bicoconut_unchecked(params);
}

Multigraph build_bicoconut_extended(const FamilyParams& params) {
    if (params.p < 1 || params.s1 < 0 || params.s2 < 0)
        throw InvalidArgument("bi-coconut tree needs p >= 1 and s1, s2 >= 0");
    return bicoconut_unchecked(params);
}

Multigraph build_coconut(int p, int s) {
    if (p < 1 || s < 1) throw InvalidArgument("coconut tree needs p, s >= 1");
    std::vector<VertexLabel> labels;
    for (int i = 1; i <= p; ++i) labels.push_back(VertexLabel::path(i));
    for (int j = 1; j <= s; ++j) labels.push_back(VertexLabel::right_leaf(j));
    Multigraph g(std::move(labels));
    for (int i = 0; i + 1 < p; ++i) g.add_edge(i, i + 1);
    for (int j = 0; j < s; ++j) g.add_edge(p - 1, p + j);
    return g;
}

Multigraph build_left_comb(int p) {
    if (p < 2) throw InvalidArgument("left comb needs p >= 2");
    std::vector<VertexLabel> labels;
    for (int i = 1; i <= p; ++i) labels.push_back(VertexLabel::path(i));
    for (int i = 1; i < p; ++i) labels.push_back(VertexLabel::comb_leaf(i));
    Multigraph g(std::move(labels));
    for (int i = 0; i + 1 < p; ++i) g.add_edge(i, i + 1);
    // l_i hangs off pi_{i+1}
    for (int i = 1; i < p; ++i) g.add_edge(i, p + i - 1);
    return g;
}

Multigraph build_path(int n) {
    if (n < 1) throw InvalidArgument("path needs at least one vertex");
    std::vector<VertexLabel> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(VertexLabel::path(i));
    Multigraph g(std::move(labels));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph cone(const Multigraph& g) {
    if (g.vertex_count() == 0) throw InvalidArgument("cone of an empty graph");
    if (g.has_apex()) throw InvalidArgument("graph already has a cone apex");
    auto labels = g.vertices();
    labels.push_back(VertexLabel::apex());
    Multigraph out(std::move(labels));
    const auto n = g.vertex_count();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (g.multiplicity(u, v) > 0) out.add_edge(u, v, g.multiplicity(u, v));
    for (std::size_t u = 0; u < n; ++u) out.add_edge(u, n);
    return out;
}

Multigraph cone_plus(const Multigraph& g, const VertexLabel& v) {
    if (!g.is_tree()) throw InvalidArgument("cone_plus expects a tree");
    const auto idx = g.index_of(v);
    auto out = cone(g);
    out.add_edge(idx, out.vertex_count() - 1);
    return out;
}

LeafDeletion delete_leaf(const Multigraph& t, const VertexLabel& leaf) {
    if (!t.is_tree()) throw InvalidArgument("delete_leaf expects a tree");
    const auto idx = t.index_of(leaf);
    if (t.degree(idx) != 1) throw InvalidArgument(to_string(leaf) + " is not a leaf");
    const auto nb = t.neighbors(idx).front();
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < t.vertex_count(); ++v)
        if (v != idx) keep.push_back(v);
    std::vector<VertexLabel> labels;
    for (auto v : keep) labels.push_back(t.label(v));
    Multigraph out(std::move(labels));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (int m = t.multiplicity(keep[i], keep[j]); m > 0) out.add_edge(i, j, m);
    return {std::move(out), t.label(nb)};
}

Multigraph attach_leaf(const Multigraph& t, const VertexLabel& leaf, const VertexLabel& neighbor) {
    if (t.contains(leaf)) throw InvalidArgument(to_string(leaf) + " already present");
    const auto nb = t.index_of(neighbor);
    auto labels = t.vertices();
    labels.push_back(leaf);
    Multigraph out(std::move(labels));
    for (std::size_t u = 0; u < t.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < t.vertex_count(); ++v)
            if (int m = t.multiplicity(u, v); m > 0) out.add_edge(u, v, m);
    out.add_edge(nb, t.vertex_count());
    return out;
}

Multigraph relabel(const Multigraph& g, const std::function<VertexLabel(const VertexLabel&)>& map) {
    std::vector<VertexLabel> labels;
    for (const auto& l : g.vertices()) labels.push_back(map(l));
    Multigraph out(std::move(labels));
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
            if (int m = g.multiplicity(u, v); m > 0) out.add_edge(u, v, m);
    return out;
}

Multigraph reorder(const Multigraph& g, std::span<const std::size_t> order) {
    const auto n = g.vertex_count();
    std::vector<std::size_t> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(n);
    std::iota(expected.begin(), expected.end(), std::size_t{0});
    if (sorted != expected) throw InvalidArgument("reorder expects a permutation");
    std::vector<VertexLabel> labels;
    for (auto v : order) labels.push_back(g.label(v));
    Multigraph out(std::move(labels));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (int m = g.multiplicity(order[i], order[j]); m > 0) out.add_edge(i, j, m);
    return out;
}

}  // namespace sandpilion
