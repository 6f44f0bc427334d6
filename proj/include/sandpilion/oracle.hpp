#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sandpilion/bigint.hpp"
#include "sandpilion/graph.hpp"

namespace sandpilion {

/// Edge-instance budget for the enumeration oracles: SANDPILION_BUDGET if set, else 24.
std::size_t enumeration_budget();

/// Counts spanning trees by testing every (n-1)-subset of edge instances, parallel
/// copies distinct. OpenMP-parallel over subset masks.
/// Throws DisconnectedGraph, BudgetExceeded (more edge instances than the budget).
BigInt brute_force_tau(const Multigraph& g);
/// Serial reference for brute_force_tau: recursive walk over edge choices, pruning cycles.
BigInt brute_force_tau_serial(const Multigraph& g);

/// tau(G) = tau(G - e) + tau(G / e), loops dropped after contraction.
/// Throws DisconnectedGraph, BudgetExceeded.
BigInt deletion_contraction_tau(const Multigraph& g);

struct NamedTree {
    std::string name;
    Multigraph tree;
};

/// Bi-coconut, coconut and left comb trees with at most max_vertices vertices.
std::vector<NamedTree> family_trees(std::size_t max_vertices);

using TauFunction = std::function<BigInt(const Multigraph&)>;

/// Both cone deletion identities at a leaf of a tree t, with neighbour v:
///   tau(cone(t))          = tau(cone(t - leaf)) + tau(cone_plus(t - leaf, v))
///   tau(cone_plus(t, leaf)) = tau(cone(t))     + tau(cone_plus(t - leaf, v))
struct ConeDeletionCheck {
    bool cone_identity = false;
    bool cone_plus_identity = false;
    bool holds() const { return cone_identity && cone_plus_identity; }
};

ConeDeletionCheck check_cone_deletion(const Multigraph& t, const VertexLabel& leaf, const TauFunction& tau_fn);

}  // namespace sandpilion
