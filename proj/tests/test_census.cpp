#include <numeric>

#include "doctest.h"
#include "gamma0/census.hpp"
#include "gamma0/error.hpp"
#include "gamma0/hyperbola.hpp"
#include "oracles.hpp"

using namespace gamma0;
using namespace gamma0::census;

namespace {

std::uint64_t class_sum(const CensusResult& r) {
    return std::accumulate(r.per_class->begin(), r.per_class->end(), std::uint64_t{0});
}

void require_same(const CensusResult& a, const CensusResult& b) {
    REQUIRE(a.total == b.total);
    REQUIRE(a.boundary == b.boundary);
    REQUIRE(a.per_class.has_value());
    REQUIRE(b.per_class.has_value());
    REQUIRE(*a.per_class == *b.per_class);
}

}  // namespace

TEST_CASE("sign classes") {
    const auto& all = all_sign_classes();
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(index(all[i]) == i);
    CHECK(to_string(SignClass{1, -1, 1}) == "(+1,-1,+1)");
    CHECK(parse_method("bezout") == Method::Bezout);
    CHECK_FALSE(parse_method("fast").has_value());
}

TEST_CASE("naive examples") {
    CHECK(count_naive(5, 3).total == 14);
    const auto r = count_naive(1, 1);
    CHECK(r.total == 20);
    CHECK(r.boundary == 20);
    CHECK(class_sum(r) == 0);
    CHECK(count_naive(2, 1).total == 6);
    CHECK(count_naive(3, 0).total == 0);
}

TEST_CASE("naive agrees with enumeration of all four entries") {
    for (std::int64_t Q = 1; Q <= 4; ++Q) {
        for (std::int64_t X = 0; X <= 8; ++X) {
            const auto brute = oracle::census_scan(Q, X);
            const auto r = count_naive(Q, X);
            INFO("Q=" << Q << " X=" << X);
            REQUIRE(r.total == brute.total);
            REQUIRE(r.boundary == brute.boundary);
            REQUIRE(*r.per_class == brute.cls);
        }
    }
}

TEST_CASE("naive guard") {
    CHECK_THROWS_AS(count_naive(1, 61), GuardRefusal);
    CensusOptions wide;
    wide.naive_guard = 70;
    CHECK_NOTHROW(count_naive(20, 61, wide));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(count_exact(0, 5), RangeError);
    CHECK_THROWS_AS(count_bezout(0, 5), RangeError);
    CHECK_THROWS_AS(count_exact(1, kMaxHeight + 1), OverflowError);
    CHECK_THROWS_AS(count_boundary(1, kMaxHeight + 1), OverflowError);
}

TEST_CASE("bezout examples and agreement with naive") {
    CHECK(count_bezout(5, 3).total == 14);
    CHECK(count_bezout(1, 1).total == 20);
    require_same(count_bezout(3, 40), count_naive(3, 40));
    for (std::uint64_t Q = 1; Q <= 6; ++Q) {
        for (std::uint64_t X = 1; X <= 15; ++X) {
            INFO("Q=" << Q << " X=" << X);
            require_same(count_bezout(Q, X), count_naive(Q, X));
        }
    }
}

TEST_CASE("sign class examples") {
    CHECK(count_sign_class(1, 1, {1, 1, 1}) == 0);
    CHECK(count_sign_class(1, 2, {1, 1, 1}) == 2);
    CHECK(count_sign_class(2, 10, {1, 1, -1}) == count_naive(2, 10).class_count({1, 1, -1}));
    CHECK(count_sign_class(7, 5, {1, 1, 1}) == 0);
}

TEST_CASE("every sign class matches its naive count") {
    for (std::uint64_t Q = 1; Q <= 5; ++Q) {
        for (std::uint64_t X = 1; X <= 20; ++X) {
            const auto naive = count_naive(Q, X);
            for (const SignClass& s : all_sign_classes()) {
                INFO("Q=" << Q << " X=" << X << " class=" << to_string(s));
                REQUIRE(count_sign_class(Q, X, s) == naive.class_count(s));
            }
        }
    }
}

TEST_CASE("boundary closed form") {
    CHECK(count_boundary(1, 1) == 20);
    CHECK(count_boundary(5, 3) == 14);
    CHECK(count_boundary(2, 4) == count_naive(2, 4).boundary);
    for (std::uint64_t Q = 1; Q <= 7; ++Q) {
        for (std::uint64_t X = 0; X <= 30; ++X) {
            INFO("Q=" << Q << " X=" << X);
            REQUIRE(count_boundary(Q, X) == count_naive(Q, X).boundary);
        }
    }
}

TEST_CASE("hyperbola counter examples and breakdown") {
    auto r = count_exact(1, 1);
    CHECK(r.total == 20);
    CHECK(r.method == Method::Hyperbola);
    r = count_exact(5, 3);
    CHECK(r.total == 14);
    for (std::uint64_t Q = 1; Q <= 6; ++Q) {
        for (std::uint64_t X = 1; X <= 25; ++X) {
            const auto e = count_exact(Q, X);
            REQUIRE(e.total == e.boundary + class_sum(e));
            require_same(e, count_naive(Q, X));
        }
    }
}

TEST_CASE("hyperbola counter regression constant at X = 5000") {
    // Cross-checked once against count_bezout(1, 5000).
    CHECK(count_exact(1, 5000).total == 243'214'644ULL);
}

TEST_CASE("partitioning across threads does not change counts") {
    CensusOptions one, three;
    three.threads = 3;
    for (const std::uint64_t Q : {1, 4, 9}) {
        require_same(count_exact(Q, 300, one), count_exact(Q, 300, three));
        require_same(count_bezout(Q, 120, one), count_bezout(Q, 120, three));
        CHECK(count_gamma1(Q, 90, one) == count_gamma1(Q, 90, three));
    }
}

TEST_CASE("class (1,1,1) fibers match the hyperbolic curve count") {
    for (std::uint64_t Q = 1; Q <= 3; ++Q) {
        for (std::uint64_t c = 1; c <= 4; ++c) {
            const std::uint64_t cq = c * Q;
            for (std::uint64_t X = cq; X <= 30; ++X) {
                // class (1,1,1) matrices with lower-left entry cq and a > cq
                std::uint64_t direct = 0, unit_pairs = 0;
                for (std::uint64_t a = cq + 1; a <= X; ++a) {
                    for (std::uint64_t d = 1; d <= X; ++d) {
                        if (a * d == 1) ++unit_pairs;
                        if ((a * d - 1) % cq != 0) continue;
                        const std::uint64_t b = (a * d - 1) / cq;
                        direct += b >= 1 && b <= X;
                    }
                }
                const std::uint64_t curve = hyperbola::count_under_curve(
                    {cq, 1, cq, X - cq, hyperbola::Hyperbolic{cq * X + 1}});
                INFO("Q=" << Q << " c=" << c << " X=" << X);
                REQUIRE(direct == curve - unit_pairs);
            }
        }
    }
}

TEST_CASE("gamma1 and gamma examples") {
    for (const std::uint64_t X : {1, 2, 7, 20}) {
        const std::uint64_t full = count_exact(1, X).total;
        CHECK(count_gamma1(1, X) == full);
        CHECK(count_gamma_full(1, X) == full);
    }
    CHECK(count_gamma_full(2, 1) == 2);
    const auto g1 = oracle::census_scan(2, 3, [](auto a, auto, auto, auto d) {
        return ((a % 2) + 2) % 2 == 1 && ((d % 2) + 2) % 2 == 1;
    });
    CHECK(count_gamma1(2, 3) == g1.total);
}

TEST_CASE("gamma1 and gamma agree with residue-filtered enumeration") {
    for (std::int64_t Q = 1; Q <= 5; ++Q) {
        const auto one = [Q](std::int64_t v) { return ((v % Q) + Q) % Q == 1 % Q; };
        const auto zero = [Q](std::int64_t v) { return v % Q == 0; };
        for (std::int64_t X = 1; X <= 8; ++X) {
            const auto g1 = oracle::census_scan(Q, X, [&](auto a, auto, auto, auto d) { return one(a) && one(d); });
            const auto g = oracle::census_scan(
                Q, X, [&](auto a, auto b, auto, auto d) { return one(a) && one(d) && zero(b); });
            INFO("Q=" << Q << " X=" << X);
            REQUIRE(count_gamma1(Q, X) == g1.total);
            REQUIRE(count_gamma_full(Q, X) == g.total);
        }
    }
}

TEST_CASE("structural monotonicity") {
    for (std::uint64_t Q = 1; Q <= 8; ++Q) {
        std::uint64_t prev = 0;
        for (std::uint64_t X = 1; X <= 60; ++X) {
            const std::uint64_t t = count_exact(Q, X).total;
            REQUIRE(t >= prev);
            prev = t;
            if (X <= 30) {
                REQUIRE(count_gamma_full(Q, X) <= count_gamma1(Q, X));
                REQUIRE(count_gamma1(Q, X) <= t);
            }
            for (std::uint64_t k = 2; k * Q <= 24; ++k) REQUIRE(count_exact(k * Q, X).total <= t);
        }
    }
}

TEST_CASE("Q above X leaves only c = 0") {
    for (std::uint64_t X = 1; X <= 40; ++X) {
        for (const std::uint64_t extra : {1, 2, 50}) {
            REQUIRE(count_exact(X + extra, X).total == 2 * (2 * X + 1));
        }
    }
}
