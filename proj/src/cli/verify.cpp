#include <numeric>
#include <sstream>

#include "gamma0/arith.hpp"
#include "gamma0/cli.hpp"
#include "gamma0/error.hpp"
#include "gamma0/hyperbola.hpp"
#include "gamma0/mainterm.hpp"

namespace gamma0::cli {

namespace {

using census::CensusResult;
using census::SignClass;

std::string describe(const char* name, const CensusResult& r) {
    std::ostringstream os;
    os << name << "{total=" << r.total << " boundary=" << r.boundary;
    if (r.per_class) {
        os << " classes=";
        for (std::size_t i = 0; i < r.per_class->size(); ++i) os << (i ? "," : "") << (*r.per_class)[i];
    }
    os << "}";
    return os.str();
}

bool same(const CensusResult& a, const CensusResult& b) {
    return a.total == b.total && a.boundary == b.boundary && a.per_class == b.per_class;
}

void fail(CheckOutcome& c, const std::string& what) {
    if (c.passed) c.first_failure = what;
    c.passed = false;
}

// Direct double loop over the box or the region under M / u.
std::uint64_t scan(std::uint64_t q, std::uint64_t r, std::uint64_t U, std::uint64_t V, std::uint64_t M,
                   bool hyperbolic) {
    std::uint64_t n = 0;
    for (std::uint64_t u = 1; u <= U; ++u) {
        const std::uint64_t top = hyperbolic ? M / u : V;
        for (std::uint64_t v = 1; v <= top; ++v) n += (u * v) % q == r % q;
    }
    return n;
}

}  // namespace

VerifyBackend default_backend(unsigned threads) {
    census::CensusOptions opt;
    opt.threads = threads;
    return {
        [opt](std::uint64_t q, std::uint64_t x) { return census::count_naive(q, x, opt); },
        [opt](std::uint64_t q, std::uint64_t x) { return census::count_bezout(q, x, opt); },
        [opt](std::uint64_t q, std::uint64_t x) { return census::count_exact(q, x, opt); },
    };
}

bool VerifyReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

VerifyReport run_verify(const VerifyOptions& options, const VerifyBackend& backend) {
    if (options.max_q < 1 || options.max_x < 1) throw InvalidQuery("verify bounds must be positive");
    if (options.max_x > census::kDefaultNaiveGuard) {
        throw InvalidQuery("max-x must not exceed the naive guard " +
                           std::to_string(census::kDefaultNaiveGuard));
    }
    VerifyReport report;

    CheckOutcome triple;
    triple.name = "triple-oracle";
    CheckOutcome bijection;
    bijection.name = "sign-bijections";
    for (std::uint64_t q = 1; q <= options.max_q; ++q) {
        for (std::uint64_t x = 1; x <= options.max_x; ++x) {
            const auto naive = backend.naive(q, x);
            const auto bezout = backend.bezout(q, x);
            const auto fast = backend.hyperbola(q, x);
            ++triple.cells;
            ++bijection.cells;
            const std::string cell = "Q=" + std::to_string(q) + " X=" + std::to_string(x) + ": ";
            if (!same(naive, bezout) || !same(naive, fast)) {
                fail(triple, cell + describe("naive", naive) + " " + describe("bezout", bezout) + " " +
                                 describe("hyperbola", fast));
            }
            if (!naive.per_class) {
                fail(bijection, cell + "naive breakdown missing");
                continue;
            }
            for (const SignClass& s : census::all_sign_classes()) {
                const SignClass rep = s.delta == s.alpha ? SignClass{1, 1, 1} : SignClass{1, 1, -1};
                if (naive.class_count(s) != naive.class_count(rep)) {
                    fail(bijection, cell + "class " + census::to_string(s) + " has " +
                                        std::to_string(naive.class_count(s)) + " but " +
                                        census::to_string(rep) + " has " +
                                        std::to_string(naive.class_count(rep)));
                }
            }
        }
    }
    report.checks.push_back(triple);
    report.checks.push_back(bijection);

    CheckOutcome identity;
    identity.name = "moebius-identity";
    const auto sieve = arith::build_sieve(
        std::max<std::uint64_t>(2, options.identity_max_q * options.identity_max_x + 1));
    for (std::uint64_t q = 1; q <= options.identity_max_q; ++q) {
        for (std::uint64_t x = 0; x <= options.identity_max_x; ++x) {
            ++identity.cells;
            const auto direct = mainterm::g_direct(q, x, sieve);
            const auto mobius = mainterm::g_mobius(q, x, sieve);
            if (direct != mobius) {
                fail(identity, "Q=" + std::to_string(q) + " X=" + std::to_string(x) + ": direct=" +
                                   direct.str() + " moebius=" + mobius.str());
            }
        }
    }
    report.checks.push_back(identity);

    CheckOutcome kernel;
    kernel.name = "hyperbola-oracle";
    for (std::uint64_t q = 1; q <= 20; ++q) {
        for (const std::uint64_t r : {std::uint64_t{1}, q - 1}) {
            if (q > 1 && std::gcd(r, q) != 1) continue;
            for (std::uint64_t U = 1; U <= 20; ++U) {
                for (std::uint64_t V = 1; V <= 20; ++V) {
                    ++kernel.cells;
                    const auto got = hyperbola::count_box({q, r, U, V});
                    const auto want = scan(q, r, U, V, 0, false);
                    if (got != want) {
                        fail(kernel, "box q=" + std::to_string(q) + " r=" + std::to_string(r) + " U=" +
                                         std::to_string(U) + " V=" + std::to_string(V) + ": got " +
                                         std::to_string(got) + " want " + std::to_string(want));
                    }
                }
            }
            for (std::uint64_t M = 0; M <= 150; ++M) {
                ++kernel.cells;
                const auto got = hyperbola::count_under_curve({q, r, 0, 15, hyperbola::Hyperbolic{M}});
                const auto want = scan(q, r, 15, 0, M, true);
                if (got != want) {
                    fail(kernel, "curve q=" + std::to_string(q) + " r=" + std::to_string(r) + " M=" +
                                     std::to_string(M) + ": got " + std::to_string(got) + " want " +
                                     std::to_string(want));
                }
            }
        }
    }
    report.checks.push_back(kernel);
    return report;
}

}  // namespace gamma0::cli
