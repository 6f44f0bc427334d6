#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sandpilion/bigint.hpp"
#include "sandpilion/graph.hpp"
#include "sandpilion/int_matrix.hpp"

namespace sandpilion {

/// Finite abelian group in invariant-factor form: every factor > 1, each dividing the next.
class AbelianGroup {
public:
    AbelianGroup() = default;

    /// Accepts a divisibility chain, drops unit factors. Throws on a broken chain or a factor < 1.
    static AbelianGroup from_invariant_factors(std::span<const BigInt> factors);
    /// Direct sum of cyclic groups Z/n_i in any order; normalises to invariant-factor form.
    static AbelianGroup from_cyclic_orders(std::span<const BigInt> orders);

    const std::vector<BigInt>& factors() const { return factors_; }
    BigInt order() const;
    std::size_t mu() const { return factors_.size(); }
    bool cyclic() const { return factors_.size() <= 1; }

    bool operator==(const AbelianGroup&) const = default;

private:
    std::vector<BigInt> factors_;
};

/// "Z_2 + Z_2 + Z_84"; "0" for the trivial group.
std::string to_string(const AbelianGroup& group);

IntMatrix laplacian(const Multigraph& g);
IntMatrix reduced_laplacian(const Multigraph& g, const VertexLabel& removed);
/// The cone apex when present, otherwise the last vertex in storage order.
VertexLabel reduction_vertex(const Multigraph& g);

/// Spanning-tree count via Matrix-Tree. Throws DisconnectedGraph.
BigInt tau(const Multigraph& g);
AbelianGroup sandpile_group(const Multigraph& g);
std::size_t mu(const Multigraph& g);

/// Whether the images of e_v for the leaves v != omit generate the sandpile group of cone(t),
/// i.e. whether [reduced Laplacian | those basis columns] has all invariant factors 1.
bool check_leaf_generators(const Multigraph& t, const VertexLabel& omit);

struct CombClaims {
    BigInt claim1_minor;  // first row and first column deleted
    BigInt claim2_minor;  // first row and last column deleted
    bool claim1_minor_is_odd() const { return mpz_odd_p(claim1_minor.get_mpz_t()) != 0; }
};

/// The two (2p-2)x(2p-2) minors of the apex-reduced Laplacian of cone(left_comb(p)),
/// rows/columns ordered pi_1..pi_p, l_1..l_{p-1}.
CombClaims comb_claims(int p);

}  // namespace sandpilion
