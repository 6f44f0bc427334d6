#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sandpilion/bigint.hpp"
#include "sandpilion/graph.hpp"
#include "sandpilion/int_matrix.hpp"

namespace sandpilion {

/// Scalar abbreviations used by the leaf-relation matrices of cone(T(p, s1, s2)).
/// With g = F_{2p-2} and h = -F_{2p-4}:
///   d = (s1+2) F_{2p-2} - F_{2p-4},   e = F_{2p-6} - (s1+2) F_{2p-4},   f = s2 + 2,
///   y = 2(gf+h) - s2 g,               z = 2(df+e) - s2 d,
///   two_x = 2 x(p), the doubled upper-left entry of the block-triangular reduction of M'.
struct RelationScalars {
    BigInt d, e, f, g, h, y, z, two_x;
};

/// Throws InvalidArgument for p < 2 or s1, s2 < 1.
RelationScalars scalars(const FamilyParams& params);

/// Alternative closed forms of y, z and two_x written directly in Fibonacci numbers;
/// used to cross-check `scalars`.
RelationScalars scalars_fibonacci_form(const FamilyParams& params);

/// (2+s1+s2)-square relation matrix; rows indexed by pi_{p-1}, pi_p, sigma_(1,*), sigma_(2,*).
IntMatrix build_M(const FamilyParams& params);
/// (s1+s2)-square relation matrix among the leaves alone; rows sigma_(2,1), sigma_(1,*), sigma_(2,2..).
IntMatrix build_M_prime(const FamilyParams& params);
/// build_M_prime with first-row middle entries 2(gf+h) - s2 g and the -g block kept, as the
/// matrix is restated before its Smith form is computed. Equals build_M_prime when s2 = 1 and
/// has a different determinant otherwise.
IntMatrix build_M_prime_restated(const FamilyParams& params);
/// build_M_prime after adding -g/2 times columns s1+2.. to columns 2..s1+1: middle entries
/// 2(gf+h) - s2 g and a zero block below them. Same determinant as build_M_prime; the column
/// operation is unimodular, hence the cokernel is the same, when g is even.
IntMatrix build_M_prime_column_reduced(const FamilyParams& params);
/// 2x2 end matrix [[-z, -y], [s1, 2]]; needs p = 0, 2 mod 3 and s1, s2 >= 2.
IntMatrix build_N(const FamilyParams& params);
bool n_matrix_applicable(const FamilyParams& params);

/// A named relation among basis vectors of Z^{V - apex}, as an integer vector in the
/// canonical vertex order of cone(T(p, s1, s2)) with the apex removed.
struct Relation {
    std::string name;
    std::vector<BigInt> vector;
};

/// Leaf, endpoint, interior-path and trunk relations (the last expressing e_{pi_1}, e_{pi_2}
/// through Fibonacci combinations of e_{pi_{i-1}}, e_{pi_i}).
std::vector<Relation> trunk_relations(const FamilyParams& params);
/// Columns of build_M re-expanded into full coordinates.
std::vector<Relation> m_column_relations(const FamilyParams& params);

/// All trunk relations lie in the image of the reduced Laplacian.
bool verify_trunk_relations(const FamilyParams& params);
/// All columns of M lie in the image of the reduced Laplacian.
bool verify_m_columns(const FamilyParams& params);
/// |det M'| = t, |det M'| = 2^{s1+s2-2} a, and two_x = a.
bool verify_detM_prime(const FamilyParams& params);
/// Nontrivial invariant factors of M' (both variants) equal the sandpile group.
bool verify_cokernel_equivalence(const FamilyParams& params);
/// |det N| = a, and SNF(N) = diag(1, a) if s1 or s2 odd, diag(2, a/2) with y, z even otherwise.
/// nullopt when N is not applicable at these parameters.
std::optional<bool> verify_N(const FamilyParams& params);

}  // namespace sandpilion
