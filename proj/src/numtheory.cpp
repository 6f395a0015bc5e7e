#include "p1dyn/numtheory.hpp"

#include <algorithm>

#include "p1dyn/errors.hpp"

namespace p1dyn {

int moebius(std::uint64_t n) {
    if (n == 0) throw Error("moebius: n must be positive");
    int primes = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) throw Error("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, int>> fac;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fac.emplace_back(p, e);
        }
    }
    if (n > 1) fac.emplace_back(n, 1);
    return fac;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    const auto fac = factorize(n);
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : fac) {
        const std::size_t sz = divs.size();
        std::uint64_t pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

// One Pollard rho round with Brent cycle detection; n odd composite.
BigInt pollard_rho(const BigInt& n, unsigned long c, unsigned long max_iters) {
    BigInt x(2), y(2), d(1), diff, prod(1);
    unsigned long iters = 0;
    auto step = [&](BigInt& v) {
        v = (v * v + c) % n;
    };
    while (d == 1 && iters < max_iters) {
        step(x);
        step(y);
        step(y);
        diff = x - y;
        if (diff == 0) return BigInt(1);  // cycle without factor; retry with new c
        prod = (prod * diff) % n;
        if (++iters % 64 == 0 || iters >= max_iters) {
            d = gcd_int(prod < 0 ? BigInt(-prod) : prod, n);
            if (d > 1) return d;
        }
    }
    d = gcd_int(prod < 0 ? BigInt(-prod) : prod, n);
    return d;
}

bool is_probable_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

bool factor_rec(const BigInt& n, std::vector<BigInt>& out, int depth) {
    if (n == 1) return true;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return true;
    }
    if (depth > 64) return false;
    for (unsigned long c = 1; c <= 24; ++c) {
        BigInt d = pollard_rho(n, c, 1u << 22);
        if (d > 1 && d < n)
            return factor_rec(d, out, depth + 1) && factor_rec(n / d, out, depth + 1);
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::pair<BigInt, int>>> factorize_big(const BigInt& n) {
    BigInt m = n < 0 ? BigInt(-n) : n;
    if (m <= 1) throw Error("factorize_big: |n| must exceed 1");
    std::vector<BigInt> primes;
    for (unsigned long p = 2; p < 100000ul && BigInt(p) * p <= m; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            primes.emplace_back(p);
        }
    }
    if (m > 1 && !factor_rec(m, primes, 0)) return std::nullopt;
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<BigInt, int>> fac;
    for (const auto& p : primes) {
        if (!fac.empty() && fac.back().first == p)
            ++fac.back().second;
        else
            fac.emplace_back(p, 1);
    }
    return fac;
}

std::vector<BigInt> divisors_from_factorization(
    const std::vector<std::pair<BigInt, int>>& fac) {
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t sz = divs.size();
        BigInt pe(1);
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

UniPoly cyclotomic(std::uint64_t k) {
    if (k == 0) throw Error("cyclotomic: k must be positive");
    const auto fac = factorize(k);
    std::uint64_t rad = 1;
    for (const auto& [p, e] : fac) rad *= p;

    // C_rad by the Moebius product, then C_k(t) = C_rad(t^{k/rad}).
    UniPoly num = UniPoly::constant("t", 1);
    UniPoly den = UniPoly::constant("t", 1);
    for (std::uint64_t d : divisors(rad)) {
        const int mu = moebius(rad / d);
        if (mu == 0) continue;
        UniPoly binom = UniPoly::monomial("t", 1, d) - UniPoly::constant("t", 1);
        (mu > 0 ? num : den) = (mu > 0 ? num : den) * binom;
    }
    UniPoly c_rad = UniPoly::exact_div(num, den);
    return c_rad.inflate(k / rad);
}

bool lucas_lehmer(std::uint64_t N) {
    if (N < 2) throw Error("lucas_lehmer: N must be at least 2");
    if (N == 2) return true;  // 2^2 - 1 = 3
    for (std::uint64_t p = 2; p * p <= N; ++p)
        if (N % p == 0) return false;
    const BigInt m = pow_int(BigInt(2), N) - 1;
    BigInt s(4);
    for (std::uint64_t i = 0; i + 2 < N; ++i) s = (s * s - 2) % m;
    return s == 0;
}

BigInt mucalc_gap(std::uint64_t a, std::uint64_t p, std::uint64_t n) {
    if (n <= 1) throw Error("mucalc_gap: n must exceed 1");
    if (a < 2 || p < 2) throw Error("mucalc_gap: requires a >= 2 and p >= 2");
    BigInt high(0), low(0);
    for (std::uint64_t k : divisors(n)) {
        const int mu = moebius(n / k);
        if (mu == 0) continue;
        high += mu * pow_int(BigInt(a), p * k);
        low += mu * pow_int(BigInt(a), k);
    }
    return high - BigInt(static_cast<unsigned long>(p)) * low;
}

}  // namespace p1dyn
