#include "sandpilion/formulas.hpp"

#include "sandpilion/errors.hpp"

namespace sandpilion {

BigInt fib(long n) {
    // F_{-n} = (-1)^{n+1} F_n
    const unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    BigInt f;
    mpz_fib_ui(f.get_mpz_t(), k);
    if (n < 0 && k % 2 == 0) f = -f;
    return f;
}

BSequence::BSequence(int s1) : s1_(s1) {
    if (s1 < 0) throw InvalidArgument("b-sequence needs s1 >= 0");
    values_.push_back(pow2(static_cast<unsigned long>(s1)));
    values_.push_back(s1 == 0 ? BigInt(1) : BigInt(pow2(static_cast<unsigned long>(s1 - 1)) * (s1 + 2)));
}

BigInt BSequence::at(long n) {
    if (n < -2) throw InvalidArgument("b_n is defined for n >= -2");
    const auto k = static_cast<std::size_t>(n + 2);
    while (values_.size() <= k) {
        const auto m = values_.size();
        values_.push_back(values_[m - 1] + values_[m - 2]);
    }
    return values_[k];
}

BigInt b(int s1, long n) { return BSequence(s1).at(n); }

namespace {

void require_family(const FamilyParams& params) {
    if (params.p < 1 || params.s1 < 1 || params.s2 < 1)
        throw InvalidArgument("closed forms need p, s1, s2 >= 1");
}

}  // namespace

BigInt t_closed(const FamilyParams& params) {
    require_family(params);
    BSequence seq(params.s1);
    const long p = params.p;
    BigInt inner = 2 * seq.at(2 * p - 3) + params.s2 * seq.at(2 * p - 4);
    return pow2(static_cast<unsigned long>(params.s2 - 1)) * inner;
}

BigInt a_value(const FamilyParams& params) {
    const BigInt t = t_closed(params);
    const BigInt divisor = pow2(static_cast<unsigned long>(params.s1 + params.s2 - 2));
    if (!divides(divisor, t))
        throw InternalInconsistency("t(p,s1,s2) is not divisible by 2^{s1+s2-2}");
    return t / divisor;
}

std::vector<BigInt> gf_coefficients(int s1, int s2, std::size_t terms, GfPrefactor prefactor) {
    if (s1 < 1 || s2 < 1) throw InvalidArgument("generating function needs s1, s2 >= 1");
    const auto shift = static_cast<unsigned long>(s1 + s2 - (prefactor == GfPrefactor::Proof ? 2 : 1));
    const BigInt scale = pow2(shift);
    // numerator n0 + n1 x over 1 - 3x + x^2
    const BigInt n0 = scale * (4 + 2 * (s1 + s2));
    const BigInt n1 = scale * (s1 * s2 - 2 * (s1 + s2));
    std::vector<BigInt> c;
    c.reserve(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        if (k == 0) c.push_back(n0);
        else if (k == 1) c.push_back(3 * c[0] + n1);
        else c.push_back(3 * c[k - 1] - c[k - 2]);
    }
    return c;
}

std::vector<BigInt> b_gf_coefficients(int s1, std::size_t terms) {
    if (s1 < 0) throw InvalidArgument("b generating function needs s1 >= 0");
    // 2^{s1-1}(2 + s1 x) = 2^{s1} + s1 2^{s1-1} x; for s1 = 0 the x term vanishes.
    const BigInt n0 = pow2(static_cast<unsigned long>(s1));
    const BigInt n1 = s1 == 0 ? BigInt(0) : BigInt(s1 * pow2(static_cast<unsigned long>(s1 - 1)));
    std::vector<BigInt> c;
    c.reserve(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        if (k == 0) c.push_back(n0);
        else if (k == 1) c.push_back(c[0] + n1);
        else c.push_back(c[k - 1] + c[k - 2]);
    }
    return c;
}

BigInt coconut_tau(int p, int s) {
    if (p < 1 || s < 1) throw InvalidArgument("coconut formula needs p, s >= 1");
    return pow2(static_cast<unsigned long>(s - 1)) * (2 * fib(2L * p + 1) + (s - 2) * fib(2L * p - 1));
}

BigInt coconut_plus_tau(int p, int s) {
    if (p < 1 || s < 1) throw InvalidArgument("coconut formula needs p, s >= 1");
    return pow2(static_cast<unsigned long>(s - 1)) * (2 * fib(2L * p + 2) + (s - 2) * fib(2L * p));
}

std::string case_name(GroupCase c) {
    switch (c) {
        case GroupCase::PMod3Is1: return "PMod3Is1";
        case GroupCase::OddS: return "OddS";
        case GroupCase::EvenSEvenS: return "EvenSEvenS";
        case GroupCase::MergedBoundary: return "MergedBoundary";
    }
    return "Unknown";
}

BigInt GroupPrediction::order() const {
    BigInt n = pow2(two_rank) * cyclic_part;
    if (four_factor) n *= 4;
    return n;
}

AbelianGroup GroupPrediction::group() const {
    std::vector<BigInt> orders(two_rank, BigInt(2));
    if (four_factor) orders.emplace_back(4);
    orders.push_back(cyclic_part);
    return AbelianGroup::from_cyclic_orders(orders);
}

GroupPrediction predict_group(const FamilyParams& params) {
    require_family(params);
    const auto [p, s1, s2] = params;
    const BigInt a = a_value(params);
    const auto s = static_cast<std::size_t>(s1 + s2);
    GroupPrediction out;
    if (p % 3 == 1) {
        out = {s - 2, false, a, GroupCase::PMod3Is1};
    } else if (s1 % 2 == 1 || s2 % 2 == 1) {
        // s1 = s2 = 1 would need Z_2^{-1} + Z_{2a}; the order-preserving reading is Z_a.
        if (s1 == 1 && s2 == 1) out = {0, false, a, GroupCase::MergedBoundary};
        else out = {s - 3, false, 2 * a, GroupCase::OddS};
    } else {
        out = {s - 4, true, a, GroupCase::EvenSEvenS};
    }
    if (out.order() != t_closed(params))
        throw InternalInconsistency("predicted group order differs from t(p,s1,s2)");
    return out;
}

}  // namespace sandpilion
