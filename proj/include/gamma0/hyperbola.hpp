#pragma once

// Lattice points on the modular hyperbola uv = r (mod q): exact counts in
// boxes and under decreasing curves, plus the matching main terms.

#include <cstdint>
#include <variant>

#include "gamma0/arith.hpp"
#include "gamma0/rational.hpp"

namespace gamma0::hyperbola {

/// Points (u, v) in [1, U] x [1, V] with uv = r (mod q). gcd(r, q) must be 1.
struct BoxQuery {
    std::uint64_t q = 1;
    std::uint64_t r = 1;
    std::uint64_t U = 0;
    std::uint64_t V = 0;
};

/// f(u) = M / u.
struct Hyperbolic {
    std::uint64_t M = 0;
};

/// f(u) = V.
struct Constant {
    std::uint64_t V = 0;
};

using CurveShape = std::variant<Hyperbolic, Constant>;

/// Points with Z < u <= Z + U, 1 <= v <= f(u), uv = r (mod q).
struct CurveQuery {
    std::uint64_t q = 1;
    std::uint64_t r = 1;
    std::uint64_t Z = 0;
    std::uint64_t U = 0;
    CurveShape f = Constant{0};
};

/// Modular inverse of u mod q, in [0, q). Requires gcd(u, q) = 1.
std::uint64_t inverse_mod(std::uint64_t u, std::uint64_t q);

std::uint64_t count_box(const BoxQuery& query);

/// phi(q) U V / q^2, exact.
BigRational box_main_term(const BoxQuery& query, const arith::FactorSieve& sieve);

std::uint64_t count_under_curve(const CurveQuery& query);

/// (1/q) * sum of f(u) over Z < u <= Z + U with gcd(u, q) = 1, f evaluated
/// as an exact rational.
BigRational curve_main_term(const CurveQuery& query);

/// #{(u, v) in [1, X]^2 : uv = r (mod q), uv <= M}. O(X log q).
std::uint64_t count_product_bounded(std::uint64_t q, std::uint64_t r, std::uint64_t X,
                                   std::uint64_t M);

}  // namespace gamma0::hyperbola
