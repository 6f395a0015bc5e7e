#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "p1dyn/rational.hpp"
#include "p1dyn/unipoly.hpp"

namespace p1dyn {

/// A positive integer extended with infinity; used for primitive periods and
/// multiplicative orders that may not exist.
struct ExtNat {
    bool infinite = false;
    std::uint64_t value = 0;

    static ExtNat inf() { return ExtNat{true, 0}; }
    static ExtNat of(std::uint64_t v) { return ExtNat{false, v}; }
    bool is(std::uint64_t v) const { return !infinite && value == v; }
    friend bool operator==(const ExtNat& a, const ExtNat& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

/// Moebius function. Rejects n = 0.
int moebius(std::uint64_t n);

/// Divisors of n in increasing order. Rejects n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Prime factorization of n > 0 as (prime, exponent) pairs, increasing primes.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Prime factorization of |n| > 1 by trial division plus Pollard rho.
/// Returns nullopt if a cofactor resists the bounded rho attempts.
std::optional<std::vector<std::pair<BigInt, int>>> factorize_big(const BigInt& n);

/// All divisors of n from a complete factorization, sorted increasing.
std::vector<BigInt> divisors_from_factorization(
    const std::vector<std::pair<BigInt, int>>& fac);

/// k-th cyclotomic polynomial, monic with integer coefficients, in variable
/// "t". Computed by the Moebius product of (t^d - 1)^{mu(k/d)} with exact
/// division (radical first, then inflation by k/rad(k)).
UniPoly cyclotomic(std::uint64_t k);

/// True iff 2^N - 1 is prime. N = 2 is a special case; composite N
/// short-circuits to false; otherwise the s_0 = 4, s_{k+1} = s_k^2 - 2
/// recurrence modulo 2^N - 1. Rejects N < 2.
bool lucas_lehmer(std::uint64_t N);

/// sum_{k|n} mu(n/k) a^{pk}  -  p * sum_{k|n} mu(n/k) a^k,
/// strictly positive for n > 1, a >= 2, p >= 2. Rejects n <= 1.
BigInt mucalc_gap(std::uint64_t a, std::uint64_t p, std::uint64_t n);

}  // namespace p1dyn
