#include <cmath>
#include <vector>

#include "doctest.h"
#include "gamma0/error.hpp"
#include "gamma0/hyperbola.hpp"
#include "oracles.hpp"

using namespace gamma0;
using namespace gamma0::hyperbola;

namespace {

const arith::FactorSieve& sieve() {
    static const arith::FactorSieve s = arith::build_sieve(1000);
    return s;
}

}  // namespace

TEST_CASE("modular inverse") {
    CHECK(inverse_mod(3, 7) == 5);
    CHECK(inverse_mod(1, 1) == 0);
    CHECK(inverse_mod(10, 7) == 5);
    CHECK_THROWS_AS(inverse_mod(4, 6), InvalidQuery);
}

TEST_CASE("count_box examples") {
    CHECK(oracle::box_scan(1, 1, 7, 3) == 21);
    CHECK(oracle::box_scan(5, 1, 5, 5) == 4);
    CHECK(oracle::box_scan(4, 1, 4, 4) == 2);
    CHECK(count_box({1, 1, 7, 3}) == 21);
    CHECK(count_box({5, 1, 5, 5}) == 4);
    CHECK(count_box({4, 1, 4, 4}) == 2);
}

TEST_CASE("box_main_term examples") {
    CHECK(box_main_term({5, 1, 5, 5}, sieve()) == BigRational(4));
    CHECK(box_main_term({1, 1, 7, 3}, sieve()) == BigRational(21));
    CHECK(box_main_term({4, 1, 4, 4}, sieve()) == BigRational(2));
    CHECK(box_main_term({6, 5, 5, 7}, sieve()) == BigRational(2 * 35, 36));
}

TEST_CASE("queries with a non-unit residue are rejected") {
    CHECK_THROWS_AS(count_box({6, 2, 5, 5}), InvalidQuery);
    CHECK_THROWS_AS(count_box({0, 1, 5, 5}), InvalidQuery);
    CHECK_THROWS_AS(box_main_term({6, 3, 5, 5}, sieve()), InvalidQuery);
    CHECK_THROWS_AS(count_under_curve({4, 2, 0, 5, Constant{3}}), InvalidQuery);
    CHECK_THROWS_AS(curve_main_term({4, 2, 0, 5, Constant{3}}), InvalidQuery);
    CHECK_THROWS_AS(count_product_bounded(9, 3, 10, 50), InvalidQuery);
    CHECK_THROWS_AS(count_under_curve({4, 1, UINT64_MAX, 5, Constant{3}}), OverflowError);
}

TEST_CASE("count_box matches prefix sums of the indicator grid") {
    constexpr std::uint64_t N = 60;
    for (std::uint64_t q = 1; q <= N; ++q) {
        for (const std::uint64_t r : {std::uint64_t{1}, q - 1}) {
            if (q > 1 && std::gcd(r, q) != 1) continue;
            // P[u][v] = #{(u', v') <= (u, v) : u'v' = r (mod q)}
            std::vector<std::vector<std::uint64_t>> P(N + 1, std::vector<std::uint64_t>(N + 1, 0));
            for (std::uint64_t u = 1; u <= N; ++u) {
                for (std::uint64_t v = 1; v <= N; ++v) {
                    P[u][v] = P[u - 1][v] + P[u][v - 1] - P[u - 1][v - 1] + ((u * v) % q == r % q);
                }
            }
            for (std::uint64_t U = 1; U <= N; ++U) {
                for (std::uint64_t V = 1; V <= N; ++V) {
                    INFO("q=" << q << " r=" << r << " U=" << U << " V=" << V);
                    REQUIRE(count_box({q, r, U, V}) == P[U][V]);
                }
            }
        }
    }
}

TEST_CASE("count_box is symmetric in U and V") {
    for (std::uint64_t q = 1; q <= 30; ++q) {
        for (std::uint64_t U = 1; U <= 25; U += 3) {
            for (std::uint64_t V = 1; V <= 25; V += 4) {
                REQUIRE(count_box({q, 1, U, V}) == count_box({q, 1, V, U}));
            }
        }
    }
}

TEST_CASE("count_under_curve examples") {
    CHECK(count_under_curve({7, 1, 0, 10, Constant{0}}) == 0);
    CHECK(count_under_curve({5, 1, 0, 5, Constant{5}}) == 4);
    const auto brute = oracle::hyperbola_scan(3, 1, 0, 6, [](std::uint64_t u) { return 6 / u; });
    CHECK(brute == 4);
    CHECK(count_under_curve({3, 1, 0, 6, Hyperbolic{6}}) == 4);
}

TEST_CASE("count_under_curve matches a direct scan") {
    for (std::uint64_t q = 1; q <= 40; ++q) {
        for (const std::uint64_t r : {std::uint64_t{1}, q - 1}) {
            if (q > 1 && std::gcd(r, q) != 1) continue;
            for (std::uint64_t M = 0; M <= 400; M += (M < 60 ? 1 : 7)) {
                for (const std::uint64_t Z : {0, 3, 17}) {
                    const auto cap = [M](std::uint64_t u) { return M / u; };
                    INFO("q=" << q << " r=" << r << " M=" << M << " Z=" << Z);
                    REQUIRE(count_under_curve({q, r, Z, 20, Hyperbolic{M}}) ==
                            oracle::hyperbola_scan(q, r, Z, 20, cap));
                }
            }
        }
    }
}

TEST_CASE("constant curve from zero is a box") {
    for (std::uint64_t q = 1; q <= 25; ++q) {
        for (std::uint64_t U = 1; U <= 30; U += 2) {
            for (std::uint64_t V = 0; V <= 30; V += 3) {
                REQUIRE(count_under_curve({q, 1, 0, U, Constant{V}}) == count_box({q, 1, U, V}));
            }
        }
    }
}

TEST_CASE("curve_main_term examples") {
    CHECK(curve_main_term({7, 1, 0, 10, Constant{0}}).is_zero());
    // (1/1) * (2/1 + 2/2)
    CHECK(curve_main_term({1, 1, 0, 2, Hyperbolic{2}}) == BigRational(3));
    // (1/2) * (3 + 3) over u in {1, 3}
    CHECK(curve_main_term({2, 1, 0, 4, Constant{3}}) == BigRational(3));
    // (1/6) * 12 * (1 + 1/5 + 1/7)
    CHECK(curve_main_term({6, 1, 0, 7, Hyperbolic{12}}) == BigRational(2) * BigRational(47, 35));
}

TEST_CASE("curve main term over one full period equals the box main term") {
    // With U = q the coprime u are a reduced residue system, so
    // (1/q) * phi(q) * V = phi(q) q V / q^2.
    for (std::uint64_t q = 1; q <= 120; ++q) {
        for (const std::uint64_t V : {1, 5, 37}) {
            REQUIRE(curve_main_term({q, 1, 0, q, Constant{V}}) == box_main_term({q, 1, q, V}, sieve()));
        }
    }
}

TEST_CASE("hyperbolic main term tracks the exact count") {
    // Counts and main terms differ by lower-order terms only; the ratio
    // approaches 1 as the region grows.
    for (const std::uint64_t q : {7, 30, 97}) {
        const CurveQuery query{q, 1, 0, 400, Hyperbolic{400ULL * 400ULL}};
        const double exact = static_cast<double>(count_under_curve(query));
        const double main = curve_main_term(query).to_double();
        INFO("q=" << q << " exact=" << exact << " main=" << main);
        CHECK(std::fabs(exact / main - 1.0) < 0.02);
    }
}

TEST_CASE("box deviation envelope at U = V = q for primes") {
    for (std::uint64_t q = 2; q <= 499; ++q) {
        if (!sieve().is_prime(q)) continue;
        const BoxQuery query{q, 1, q, q};
        const double dev = std::fabs(static_cast<double>(count_box(query)) -
                                     box_main_term(query, sieve()).to_double());
        REQUIRE(dev <= 3.0 * std::sqrt(static_cast<double>(q)) * static_cast<double>(arith::tau(q, sieve())));
    }
}

TEST_CASE("count_product_bounded examples") {
    CHECK(count_product_bounded(1, 1, 3, 0) == 0);
    CHECK(count_product_bounded(1, 1, 3, 3) == 5);
    CHECK(oracle::product_bounded_scan(5, 1, 5, 12) == 3);
    CHECK(count_product_bounded(5, 1, 5, 12) == 3);
}

TEST_CASE("count_product_bounded matches a direct scan") {
    for (std::uint64_t q = 1; q <= 14; ++q) {
        for (std::uint64_t r = 0; r < q || (q == 1 && r == 0); ++r) {
            if (std::gcd(r, q) != 1) continue;
            for (std::uint64_t X = 1; X <= 16; ++X) {
                for (std::uint64_t M = 0; M <= X * X + 2; ++M) {
                    INFO("q=" << q << " r=" << r << " X=" << X << " M=" << M);
                    REQUIRE(count_product_bounded(q, r, X, M) == oracle::product_bounded_scan(q, r, X, M));
                }
            }
            if (q == 1) break;
        }
    }
}

TEST_CASE("count_product_bounded is monotone in M and X") {
    for (const std::uint64_t q : {1, 6, 11, 24}) {
        std::uint64_t prev_x = 0;
        for (std::uint64_t X = 1; X <= 40; ++X) {
            const std::uint64_t at_x = count_product_bounded(q, 1, X, 500);
            REQUIRE(at_x >= prev_x);
            prev_x = at_x;
        }
        std::uint64_t prev_m = 0;
        for (std::uint64_t M = 0; M <= 1700; M += 3) {
            const std::uint64_t at_m = count_product_bounded(q, q - 1 == 0 ? 0 : q - 1, 40, M);
            REQUIRE(at_m >= prev_m);
            prev_m = at_m;
        }
    }
}
