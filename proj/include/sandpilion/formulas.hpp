#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sandpilion/bigint.hpp"
#include "sandpilion/graph.hpp"
#include "sandpilion/sandpile.hpp"

namespace sandpilion {

/// Fibonacci numbers with F_1 = F_2 = 1, extended to negative n by F_{n-2} = F_n - F_{n-1}.
BigInt fib(long n);

/// The Fibonacci-style sequence b_n (n >= -2) with seeds b_{-2} = 2^{s1} and
/// b_{-1} = 2^{s1-1}(s1 + 2), which is 1 when s1 = 0.
class BSequence {
public:
    explicit BSequence(int s1);

    int s1() const { return s1_; }
    /// Throws InvalidArgument for n < -2.
    BigInt at(long n);

private:
    int s1_;
    std::vector<BigInt> values_;  // values_[k] = b_{k-2}
};

BigInt b(int s1, long n);

/// 2^{s2-1} (2 b_{2p-3} + s2 b_{2p-4}), for p, s1, s2 >= 1.
BigInt t_closed(const FamilyParams& params);
/// t_closed / 2^{s1+s2-2}; the division is checked to be exact.
BigInt a_value(const FamilyParams& params);

/// Which power of two multiplies the rational generating function of t(p, s1, s2) in p.
/// Proof carries 2^{s1+s2-2} (agrees with the spanning-tree count); Statement carries
/// 2^{s1+s2-1}, which is twice every coefficient.
enum class GfPrefactor { Proof, Statement };

/// First `terms` coefficients of 2^k (4 + 2(s1+s2)(1-x) + s1 s2 x) / (1 - 3x + x^2).
std::vector<BigInt> gf_coefficients(int s1, int s2, std::size_t terms,
                                    GfPrefactor prefactor = GfPrefactor::Proof);
/// First `terms` coefficients of 2^{s1-1}(2 + s1 x) / (1 - x - x^2); entry k is b_{k-2}.
std::vector<BigInt> b_gf_coefficients(int s1, std::size_t terms);

/// Spanning-tree counts of cone(CT(p,s)) and of the cone with the apex-pi_1 edge doubled.
BigInt coconut_tau(int p, int s);
BigInt coconut_plus_tau(int p, int s);

enum class GroupCase { PMod3Is1, OddS, EvenSEvenS, MergedBoundary };
std::string case_name(GroupCase c);

/// Predicted sandpile group of cone(T(p, s1, s2)):
/// Z_2^{two_rank} (+ Z_4 if four_factor) (+ Z_{cyclic_part}).
struct GroupPrediction {
    std::size_t two_rank = 0;
    bool four_factor = false;
    BigInt cyclic_part;
    GroupCase case_tag = GroupCase::PMod3Is1;

    BigInt order() const;
    /// Expanded to invariant-factor form.
    AbelianGroup group() const;
};

GroupPrediction predict_group(const FamilyParams& params);

}  // namespace sandpilion
