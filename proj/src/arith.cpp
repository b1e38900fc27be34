#include "gamma0/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gamma0/error.hpp"

namespace gamma0::arith {

FactorSieve::FactorSieve(std::uint64_t limit, std::uint64_t budget) : limit_(limit) {
    if (limit < 2) throw RangeError("sieve limit must be at least 2");
    if (limit > budget || limit > UINT32_MAX) {
        throw CapacityError("sieve limit " + std::to_string(limit) +
                            " exceeds memory budget of " + std::to_string(budget) + " entries");
    }
    spf_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        spf_[i] = static_cast<std::uint32_t>(i);
        if (i * i > limit) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

void FactorSieve::check(std::uint64_t n) const {
    if (n == 0 || n > limit_) {
        throw RangeError("argument " + std::to_string(n) + " outside sieve range [1, " +
                         std::to_string(limit_) + "]");
    }
}

std::uint64_t FactorSieve::spf(std::uint64_t n) const {
    check(n);
    if (n < 2) throw RangeError("spf is undefined for 1");
    return spf_[n];
}

bool FactorSieve::is_prime(std::uint64_t n) const {
    check(n);
    return n >= 2 && spf_[n] == n;
}

Factorization FactorSieve::factorize(std::uint64_t n) const {
    check(n);
    Factorization out;
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    return out;
}

FactorSieve build_sieve(std::uint64_t limit, std::uint64_t budget) {
    return FactorSieve(limit, budget);
}

std::uint64_t default_sieve_limit(std::uint64_t Q, std::uint64_t X) {
    if (Q == 0) throw RangeError("Q must be positive");
    const std::uint64_t rounded = Q * ((X + Q - 1) / Q);
    return std::max({X, rounded, std::uint64_t{1}}) + 1;
}

std::uint64_t euler_phi(const Factorization& f) {
    std::uint64_t r = 1;
    for (const auto& [p, e] : f) {
        r *= p - 1;
        for (unsigned i = 1; i < e; ++i) r *= p;
    }
    return r;
}

int mobius(const Factorization& f) {
    for (const auto& pp : f) {
        if (pp.exponent > 1) return 0;
    }
    return f.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t tau(const Factorization& f) {
    std::uint64_t r = 1;
    for (const auto& pp : f) r *= pp.exponent + 1;
    return r;
}

std::uint64_t dedekind_psi(const Factorization& f) {
    std::uint64_t r = 1;
    for (const auto& [p, e] : f) {
        r *= p + 1;
        for (unsigned i = 1; i < e; ++i) r *= p;
    }
    return r;
}

std::uint64_t euler_phi(std::uint64_t n, const FactorSieve& sieve) {
    return euler_phi(sieve.factorize(n));
}
int mobius(std::uint64_t n, const FactorSieve& sieve) { return mobius(sieve.factorize(n)); }
std::uint64_t tau(std::uint64_t n, const FactorSieve& sieve) { return tau(sieve.factorize(n)); }
unsigned omega(std::uint64_t n, const FactorSieve& sieve) {
    return static_cast<unsigned>(sieve.factorize(n).size());
}
std::uint64_t dedekind_psi(std::uint64_t n, const FactorSieve& sieve) {
    return dedekind_psi(sieve.factorize(n));
}

std::vector<std::uint64_t> divisors(std::uint64_t n, const FactorSieve& sieve) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : sieve.factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedDivisor> squarefree_divisors(std::uint64_t n, const FactorSieve& sieve) {
    std::vector<SignedDivisor> out{{1, 1}};
    for (const auto& pp : sieve.factorize(n)) {
        const std::size_t base = out.size();
        for (std::size_t i = 0; i < base; ++i) {
            out.push_back({out[i].divisor * pp.prime, -out[i].mu});
        }
    }
    return out;
}

std::vector<std::uint64_t> phi_table(std::uint64_t limit) {
    std::vector<std::uint64_t> phi(limit + 1);
    std::iota(phi.begin(), phi.end(), std::uint64_t{0});
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (phi[p] != p) continue;  // composite: already reduced by a smaller prime
        for (std::uint64_t m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
    }
    return phi;
}

std::uint64_t projective_line_size(std::uint64_t Q, const FactorSieve& sieve) {
    if (Q == 0 || Q > sieve.limit()) {
        throw RangeError("Q outside sieve range");
    }
    if (Q == 1) return 1;
    std::vector<std::uint64_t> units;
    for (std::uint64_t l = 1; l < Q; ++l) {
        if (std::gcd(l, Q) == 1) units.push_back(l);
    }
    std::vector<bool> seen(Q * Q, false);
    std::uint64_t orbits = 0;
    for (std::uint64_t u = 0; u < Q; ++u) {
        for (std::uint64_t v = 0; v < Q; ++v) {
            if (seen[u * Q + v] || std::gcd(std::gcd(u, v), Q) != 1) continue;
            ++orbits;
            for (const std::uint64_t l : units) seen[(l * u % Q) * Q + l * v % Q] = true;
        }
    }
    return orbits;
}

CoprimeCount coprime_count(std::uint64_t u, std::uint64_t v, const FactorSieve& sieve) {
    if (u == 0) throw RangeError("coprime_count: u must be positive");
    std::int64_t exact = 0;
    for (const auto& [e, mu] : squarefree_divisors(u, sieve)) {
        exact += mu * static_cast<std::int64_t>(v / e);
    }
    BigRational main = BigRational::from_u64(v) * BigRational::from_u64(euler_phi(u, sieve), u);
    return {static_cast<std::uint64_t>(exact), std::move(main)};
}

}  // namespace gamma0::arith
