#include "gamma0/hyperbola.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gamma0/error.hpp"

namespace gamma0::hyperbola {

namespace {

using u128 = unsigned __int128;

// Returns gcd(u, q) and, when it is 1, the inverse of u mod q in [0, q).
std::pair<std::uint64_t, std::uint64_t> ext_inverse(std::uint64_t u, std::uint64_t q) {
    std::int64_t old_r = static_cast<std::int64_t>(u % q), r = static_cast<std::int64_t>(q);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    const auto g = static_cast<std::uint64_t>(old_r);
    if (g != 1) return {g, 0};
    std::int64_t inv = old_s % static_cast<std::int64_t>(q);
    if (inv < 0) inv += static_cast<std::int64_t>(q);
    return {1, static_cast<std::uint64_t>(inv)};
}

// Least v in [1, q] with uv = r (mod q), or 0 when gcd(u, q) > 1.
std::uint64_t first_v(std::uint64_t u, std::uint64_t q, std::uint64_t r) {
    if (q == 1) return 1;
    const auto [g, inv] = ext_inverse(u, q);
    if (g != 1) return 0;
    const auto v = static_cast<std::uint64_t>(static_cast<u128>(r) * inv % q);
    return v == 0 ? q : v;
}

// Members of v0, v0 + q, v0 + 2q, ... not exceeding V.
std::uint64_t progression_count(std::uint64_t v0, std::uint64_t q, std::uint64_t V) {
    return v0 != 0 && v0 <= V ? (V - v0) / q + 1 : 0;
}

std::uint64_t normalized_residue(std::uint64_t q, std::uint64_t r) {
    if (q == 0) throw InvalidQuery("modulus q must be at least 1");
    const std::uint64_t rr = r % q;
    if (std::gcd(rr, q) != 1 && q != 1) {
        throw InvalidQuery("residue " + std::to_string(r) + " is not a unit modulo " +
                           std::to_string(q));
    }
    return rr;
}

std::uint64_t evaluate_floor(const CurveShape& f, std::uint64_t u) {
    if (const auto* h = std::get_if<Hyperbolic>(&f)) return h->M / u;
    return std::get<Constant>(f).V;
}

}  // namespace

std::uint64_t inverse_mod(std::uint64_t u, std::uint64_t q) {
    if (q == 0) throw InvalidQuery("modulus q must be at least 1");
    if (q == 1) return 0;
    const auto [g, inv] = ext_inverse(u, q);
    if (g != 1) throw InvalidQuery(std::to_string(u) + " is not invertible mod " + std::to_string(q));
    return inv;
}

std::uint64_t count_box(const BoxQuery& query) {
    const std::uint64_t r = normalized_residue(query.q, query.r);
    std::uint64_t total = 0;
    for (std::uint64_t u = 1; u <= query.U; ++u) {
        total += progression_count(first_v(u, query.q, r), query.q, query.V);
    }
    return total;
}

BigRational box_main_term(const BoxQuery& query, const arith::FactorSieve& sieve) {
    normalized_residue(query.q, query.r);
    const std::uint64_t phi = arith::euler_phi(query.q, sieve);
    return BigRational::from_u64(phi) * BigRational::from_u64(query.U) *
           BigRational::from_u64(query.V) / (BigRational::from_u64(query.q) * BigRational::from_u64(query.q));
}

std::uint64_t count_under_curve(const CurveQuery& query) {
    const std::uint64_t r = normalized_residue(query.q, query.r);
    if (query.Z > UINT64_MAX - query.U) throw OverflowError("Z + U overflows");
    std::uint64_t total = 0;
    for (std::uint64_t u = query.Z + 1; u <= query.Z + query.U; ++u) {
        total += progression_count(first_v(u, query.q, r), query.q, evaluate_floor(query.f, u));
    }
    return total;
}

BigRational curve_main_term(const CurveQuery& query) {
    normalized_residue(query.q, query.r);
    if (query.Z > UINT64_MAX - query.U) throw OverflowError("Z + U overflows");
    BigRational sum;
    if (const auto* c = std::get_if<Constant>(&query.f)) {
        std::uint64_t coprime = 0;
        for (std::uint64_t u = query.Z + 1; u <= query.Z + query.U; ++u) {
            if (std::gcd(u, query.q) == 1) ++coprime;
        }
        sum = BigRational::from_u64(coprime) * BigRational::from_u64(c->V);
    } else {
        // sum of M/u as M * sum(1/u); accumulate the harmonic part in mpq.
        mpq_class harmonic = 0;
        for (std::uint64_t u = query.Z + 1; u <= query.Z + query.U; ++u) {
            if (std::gcd(u, query.q) == 1) harmonic += mpq_class(1, static_cast<unsigned long>(u));
        }
        harmonic.canonicalize();
        sum = BigRational(harmonic) * BigRational::from_u64(std::get<Hyperbolic>(query.f).M);
    }
    return sum / BigRational::from_u64(query.q);
}

std::uint64_t count_product_bounded(std::uint64_t q, std::uint64_t r, std::uint64_t X,
                                   std::uint64_t M) {
    r = normalized_residue(q, r);
    const std::uint64_t u_max = std::min(X, M);
    if (u_max == 0) return 0;
    // Below this u the cap is X rather than M / u.
    const std::uint64_t flat_until = X == 0 ? 0 : M / X;
    std::uint64_t total = 0;
    if (q <= u_max) {
        // u runs over several full periods: resolve each residue class once.
        std::vector<std::uint64_t> start(q);
        for (std::uint64_t s = 0; s < q; ++s) start[s] = first_v(s == 0 ? q : s, q, r);
        std::uint64_t s = 1 % q;
        for (std::uint64_t u = 1; u <= u_max; ++u) {
            const std::uint64_t V = u <= flat_until ? X : M / u;
            total += progression_count(start[s], q, V);
            if (++s == q) s = 0;
        }
    } else {
        for (std::uint64_t u = 1; u <= u_max; ++u) {
            const std::uint64_t V = u <= flat_until ? X : M / u;
            total += progression_count(first_v(u, q, r), q, V);
        }
    }
    return total;
}

}  // namespace gamma0::hyperbola
