#include "sandpilion/sandpile.hpp"

#include <algorithm>

#include "sandpilion/errors.hpp"
#include "sandpilion/linalg.hpp"

namespace sandpilion {

AbelianGroup AbelianGroup::from_invariant_factors(std::span<const BigInt> factors) {
    AbelianGroup g;
    for (const auto& f : factors) {
        if (f < 1) throw InvalidArgument("invariant factor must be positive: " + to_decimal(f));
        if (f == 1) continue;
        if (!g.factors_.empty() && !divides(g.factors_.back(), f))
            throw InvalidArgument("invariant factors do not form a divisibility chain");
        g.factors_.push_back(f);
    }
    return g;
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::span<const BigInt> orders) {
    std::vector<BigInt> a(orders.begin(), orders.end());
    for (const auto& x : a)
        if (x < 1) throw InvalidArgument("cyclic order must be positive: " + to_decimal(x));
    // Pairwise (gcd, lcm) replacement leaves a[i] | a[j] for all i < j.
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            BigInt g = gcd_of(a[i], a[j]);
            BigInt l = a[i] / g * a[j];
            a[i] = g;
            a[j] = l;
        }
    return from_invariant_factors(a);
}

BigInt AbelianGroup::order() const {
    BigInt n = 1;
    for (const auto& f : factors_) n *= f;
    return n;
}

std::string to_string(const AbelianGroup& group) {
    if (group.factors().empty()) return "0";
    std::string out;
    for (const auto& f : group.factors()) {
        if (!out.empty()) out += " + ";
        out += "Z_" + to_decimal(f);
    }
    return out;
}

IntMatrix laplacian(const Multigraph& g) {
    const auto n = g.vertex_count();
    if (n == 0) throw InvalidArgument("Laplacian of an empty graph");
    IntMatrix l(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v)
            if (u != v) l(u, v) = -g.multiplicity(u, v);
        l(u, u) = g.degree(u);
    }
    return l;
}

IntMatrix reduced_laplacian(const Multigraph& g, const VertexLabel& removed) {
    const auto idx = g.index_of(removed);
    return laplacian(g).without(idx, idx);
}

VertexLabel reduction_vertex(const Multigraph& g) {
    if (g.vertex_count() == 0) throw InvalidArgument("empty graph");
    if (auto apex = g.find(VertexLabel::apex())) return g.label(*apex);
    return g.vertices().back();
}

namespace {

IntMatrix checked_reduced_laplacian(const Multigraph& g) {
    if (!g.is_connected()) throw DisconnectedGraph("graph is not connected");
    return reduced_laplacian(g, reduction_vertex(g));
}

}  // namespace

BigInt tau(const Multigraph& g) { return determinant(checked_reduced_laplacian(g)); }

AbelianGroup sandpile_group(const Multigraph& g) {
    const auto snf = smith_normal_form(checked_reduced_laplacian(g));
    if (snf.rank + 1 != g.vertex_count())
        throw InternalInconsistency("reduced Laplacian of a connected graph is singular");
    return AbelianGroup::from_invariant_factors(snf.diag);
}

std::size_t mu(const Multigraph& g) { return sandpile_group(g).mu(); }

bool check_leaf_generators(const Multigraph& t, const VertexLabel& omit) {
    if (!t.is_tree()) throw InvalidArgument("check_leaf_generators expects a tree");
    const auto omit_idx = t.index_of(omit);
    if (t.degree(omit_idx) != 1) throw InvalidArgument(to_string(omit) + " is not a leaf");

    const auto g = cone(t);
    const auto lbar = reduced_laplacian(g, VertexLabel::apex());
    // Cone appends the apex last, so tree vertex v keeps row v in the reduced Laplacian.
    std::vector<std::size_t> generators;
    for (auto leaf : t.leaves())
        if (leaf != omit_idx) generators.push_back(leaf);
    IntMatrix basis(lbar.rows(), generators.size());
    for (std::size_t k = 0; k < generators.size(); ++k) basis(generators[k], k) = 1;

    const auto snf = smith_normal_form(lbar.hcat(basis));
    return snf.rank == lbar.rows() &&
           std::all_of(snf.diag.begin(), snf.diag.end(), [](const BigInt& x) { return x == 1; });
}

CombClaims comb_claims(int p) {
    if (p < 2) throw InvalidArgument("comb claims need p >= 2");
    const auto lbar = reduced_laplacian(cone(build_left_comb(p)), VertexLabel::apex());
    const auto last = lbar.cols() - 1;
    return {minor_delete(lbar, 0, 0), minor_delete(lbar, 0, last)};
}

}  // namespace sandpilion
