#pragma once

// Multiplicative arithmetic functions on top of a smallest-prime-factor sieve.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gamma0/rational.hpp"

namespace gamma0::arith {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing; the empty list factors 1.
using Factorization = std::vector<PrimePower>;

// Default ceiling on sieve entries (4 bytes each), i.e. 2 GiB of table.
inline constexpr std::uint64_t kDefaultSieveBudget = std::uint64_t{1} << 29;

/// Smallest-prime-factor table for 2 <= n <= limit.
///
/// Immutable after construction, so one instance may be shared read-only by
/// any number of threads.
class FactorSieve {
public:
    /// Throws RangeError if limit < 2 and CapacityError if limit exceeds
    /// `budget` entries.
    explicit FactorSieve(std::uint64_t limit,
                         std::uint64_t budget = kDefaultSieveBudget);

    std::uint64_t limit() const noexcept { return limit_; }

    /// Smallest prime factor of n, 2 <= n <= limit.
    std::uint64_t spf(std::uint64_t n) const;

    bool is_prime(std::uint64_t n) const;

    Factorization factorize(std::uint64_t n) const;

private:
    void check(std::uint64_t n) const;

    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
};

/// Shorthand for FactorSieve{limit}.
FactorSieve build_sieve(std::uint64_t limit,
                        std::uint64_t budget = kDefaultSieveBudget);

/// Sieve limit large enough for every phi(cQ) and phi(x) needed at (Q, X):
/// max(X, Q * ceil(X / Q)) + 1.
std::uint64_t default_sieve_limit(std::uint64_t Q, std::uint64_t X);

std::uint64_t euler_phi(std::uint64_t n, const FactorSieve& sieve);
int mobius(std::uint64_t n, const FactorSieve& sieve);
std::uint64_t tau(std::uint64_t n, const FactorSieve& sieve);
unsigned omega(std::uint64_t n, const FactorSieve& sieve);
std::uint64_t dedekind_psi(std::uint64_t n, const FactorSieve& sieve);

// Same functions evaluated on an explicit factorization.
std::uint64_t euler_phi(const Factorization& f);
int mobius(const Factorization& f);
std::uint64_t tau(const Factorization& f);
std::uint64_t dedekind_psi(const Factorization& f);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n, const FactorSieve& sieve);

/// Squarefree divisors of n together with their Moebius signs.
struct SignedDivisor {
    std::uint64_t divisor;
    int mu;
};
std::vector<SignedDivisor> squarefree_divisors(std::uint64_t n,
                                               const FactorSieve& sieve);

/// phi(n) for every 0 <= n <= limit (phi(0) stored as 0). Linear sieve; used
/// by sweeps that query phi more often than limit / 2 times.
std::vector<std::uint64_t> phi_table(std::uint64_t limit);

/// Cardinality of the projective line over Z/QZ, by direct enumeration of
/// pairs (u, v) with gcd(u, v, Q) = 1 modulo multiplication by units.
/// O(Q^2) pairs; intended as an independent check on dedekind_psi.
std::uint64_t projective_line_size(std::uint64_t Q, const FactorSieve& sieve);

struct CoprimeCount {
    std::uint64_t exact;
    BigRational main_term;  // v * phi(u) / u
};

/// #{1 <= c <= v : gcd(c, u) = 1} through sum_{e | u} mu(e) floor(v / e).
CoprimeCount coprime_count(std::uint64_t u, std::uint64_t v,
                           const FactorSieve& sieve);

}  // namespace gamma0::arith
