#pragma once

#include <gmpxx.h>

#include <string>

namespace sandpilion {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt from_decimal(const std::string& text);

inline BigInt pow2(unsigned long exponent) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
    return r;
}

inline BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool divides(const BigInt& d, const BigInt& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Floor division, matching the remainder sign of the divisor.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace sandpilion
