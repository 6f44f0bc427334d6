#include "sandpilion/oracle.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>

#include "sandpilion/errors.hpp"

namespace sandpilion {

namespace {

constexpr std::size_t default_budget = 24;
constexpr std::size_t max_mask_bits = 62;

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

std::vector<std::pair<std::size_t, std::size_t>> checked_edges(const Multigraph& g) {
    if (g.vertex_count() == 0) throw InvalidArgument("empty graph");
    if (!g.is_connected()) throw DisconnectedGraph("graph is not connected");
    auto edges = g.edge_instances();
    const auto budget = enumeration_budget();
    if (edges.size() > budget)
        throw BudgetExceeded(std::to_string(edges.size()) + " edge instances exceed the budget of " +
                             std::to_string(budget));
    return edges;
}

void count_trees(const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t next,
                 std::size_t needed, const DisjointSets& sets, BigInt& count) {
    if (needed == 0) {
        ++count;
        return;
    }
    if (edges.size() - next < needed) return;
    DisjointSets with = sets;
    if (with.unite(edges[next].first, edges[next].second)) count_trees(edges, next + 1, needed - 1, with, count);
    count_trees(edges, next + 1, needed, sets, count);
}

// Dense multiplicity table that shrinks under contraction.
using Table = std::vector<std::vector<int>>;

bool table_connected(const Table& m) {
    const auto n = m.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v] && m[u][v] > 0) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

Table contract(const Table& m, std::size_t u, std::size_t v) {
    // Merge v into u; the u-v copies become loops and vanish.
    Table out = m;
    for (std::size_t w = 0; w < m.size(); ++w) {
        if (w == u || w == v) continue;
        out[u][w] += m[v][w];
        out[w][u] += m[w][v];
    }
    out[u][v] = out[v][u] = 0;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(v));
    for (auto& row : out) row.erase(row.begin() + static_cast<std::ptrdiff_t>(v));
    return out;
}

BigInt delete_contract(const Table& m) {
    if (m.size() == 1) return 1;
    if (!table_connected(m)) return 0;
    std::size_t u = 0, v = 0;
    for (std::size_t j = 1; j < m.size(); ++j)
        if (m[0][j] > 0) {
            v = j;
            break;
        }
    // Deleting one copy at a time: tau(G) = tau(G - e) + tau(G / e), where G / e is the
    // same for every copy of a parallel class.
    const int copies = m[u][v];
    Table without = m;
    without[u][v] = without[v][u] = 0;
    return delete_contract(without) + copies * delete_contract(contract(m, u, v));
}

}  // namespace

std::size_t enumeration_budget() {
    const char* text = std::getenv("SANDPILION_BUDGET");
    if (text == nullptr || *text == '\0') return default_budget;
    char* end = nullptr;
    const long value = std::strtol(text, &end, 10);
    if (*end != '\0' || value < 0) throw InvalidArgument(std::string("bad SANDPILION_BUDGET: ") + text);
    return static_cast<std::size_t>(value);
}

BigInt brute_force_tau(const Multigraph& g) {
    const auto edges = checked_edges(g);
    const auto n = g.vertex_count();
    const auto m = edges.size();
    if (m > max_mask_bits) throw BudgetExceeded("too many edge instances to enumerate");
    const auto needed = static_cast<int>(n - 1);
    const std::int64_t masks = std::int64_t{1} << m;
    unsigned long long count = 0;

#pragma omp parallel for schedule(static) reduction(+ : count)
    for (std::int64_t mask = 0; mask < masks; ++mask) {
        const auto bits = static_cast<std::uint64_t>(mask);
        if (std::popcount(bits) != needed) continue;
        DisjointSets sets(n);
        bool acyclic = true;
        for (std::size_t k = 0; k < m && acyclic; ++k)
            if (bits >> k & 1U) acyclic = sets.unite(edges[k].first, edges[k].second);
        if (acyclic) ++count;
    }
    return BigInt(std::to_string(count));
}

BigInt brute_force_tau_serial(const Multigraph& g) {
    const auto edges = checked_edges(g);
    BigInt count = 0;
    count_trees(edges, 0, g.vertex_count() - 1, DisjointSets(g.vertex_count()), count);
    return count;
}

BigInt deletion_contraction_tau(const Multigraph& g) {
    checked_edges(g);
    const auto n = g.vertex_count();
    Table m(n, std::vector<int>(n, 0));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) m[u][v] = g.multiplicity(u, v);
    return delete_contract(m);
}

std::vector<NamedTree> family_trees(std::size_t max_vertices) {
    const auto limit = static_cast<int>(max_vertices);
    std::vector<NamedTree> out;
    for (int p = 1; p + 2 <= limit; ++p)
        for (int s1 = 1; p + s1 + 1 <= limit; ++s1)
            for (int s2 = 1; p + s1 + s2 <= limit; ++s2)
                out.push_back({"T(" + std::to_string(p) + "," + std::to_string(s1) + "," + std::to_string(s2) + ")",
                               build_bicoconut({p, s1, s2})});
    for (int p = 1; p + 1 <= limit; ++p)
        for (int s = 1; p + s <= limit; ++s)
            out.push_back({"CT(" + std::to_string(p) + "," + std::to_string(s) + ")", build_coconut(p, s)});
    for (int p = 2; 2 * p - 1 <= limit; ++p)
        out.push_back({"comb(" + std::to_string(p) + ")", build_left_comb(p)});
    return out;
}

ConeDeletionCheck check_cone_deletion(const Multigraph& t, const VertexLabel& leaf, const TauFunction& tau_fn) {
    const auto [rest, v] = delete_leaf(t, leaf);
    const BigInt whole = tau_fn(cone(t));
    const BigInt shared = tau_fn(cone_plus(rest, v));
    ConeDeletionCheck out;
    out.cone_identity = whole == tau_fn(cone(rest)) + shared;
    out.cone_plus_identity = tau_fn(cone_plus(t, leaf)) == whole + shared;
    return out;
}

}  // namespace sandpilion
