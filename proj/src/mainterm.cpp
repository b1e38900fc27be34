#include "gamma0/mainterm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "gamma0/error.hpp"

namespace gamma0::mainterm {

namespace {

void require_range(std::uint64_t top, const arith::FactorSieve& sieve) {
    if (top > sieve.limit()) {
        throw RangeError("argument " + std::to_string(top) + " exceeds sieve limit " +
                         std::to_string(sieve.limit()));
    }
}

// phi(n)/n = prod (1 - 1/p) = prod (p - 1) / prod p over the primes of n.
mpq_class phi_ratio(std::uint64_t n, const arith::FactorSieve& sieve) {
    mpz_class num = 1, den = 1;
    for (const auto& pp : sieve.factorize(n)) {
        num *= static_cast<unsigned long>(pp.prime - 1);
        den *= static_cast<unsigned long>(pp.prime);
    }
    return mpq_class(num, den);  // not canonical yet; sum_terms reduces
}

// Sum of many small fractions; pairwise merging keeps operand sizes balanced.
BigRational sum_terms(std::vector<mpq_class>& terms) {
    if (terms.empty()) return BigRational{};
    for (auto& t : terms) t.canonicalize();
    while (terms.size() > 1) {
        std::vector<mpq_class> next;
        next.reserve((terms.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.emplace_back(terms[i] + terms[i + 1]);
        if (terms.size() % 2 == 1) next.push_back(std::move(terms.back()));
        terms = std::move(next);
    }
    return BigRational(terms.front());
}

}  // namespace

long double ninety_six_over_pi_squared() {
    constexpr long double pi = std::numbers::pi_v<long double>;
    return 96.0L / (pi * pi);
}

void CompensatedSum::add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
        carry_ += (sum_ - t) + v;
    } else {
        carry_ += (v - t) + sum_;
    }
    sum_ = t;
}

BigRational f1(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve) {
    if (Q == 0) throw RangeError("Q must be at least 1");
    const std::uint64_t K = X / Q;
    if (K == 0) return BigRational{};
    require_range(K * Q, sieve);
    std::vector<mpq_class> terms;
    terms.reserve(K);
    for (std::uint64_t c = 1; c <= K; ++c) terms.push_back(phi_ratio(c * Q, sieve));
    return sum_terms(terms);
}

BigRational f2(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve) {
    if (Q == 0) throw RangeError("Q must be at least 1");
    if (X <= Q) return BigRational{};
    require_range(X, sieve);
    std::vector<mpq_class> terms;
    for (std::uint64_t x = Q + 1; x <= X; ++x) {
        if (std::gcd(x, Q) == 1) terms.push_back(phi_ratio(x, sieve));
    }
    return sum_terms(terms) / BigRational::from_u64(Q);
}

BigRational f_total(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve) {
    return BigRational(8) * (f1(Q, X, sieve) + f2(Q, X, sieve));
}

std::vector<double> f_total_profile(std::uint64_t Q, std::uint64_t X_max,
                                    const arith::FactorSieve& sieve) {
    if (Q == 0) throw RangeError("Q must be at least 1");
    require_range(std::max(X_max, Q * (X_max / Q)), sieve);
    std::vector<double> out(X_max + 1, 0.0);
    CompensatedSum s1, s2;
    const double invQ = 1.0 / static_cast<double>(Q);
    for (std::uint64_t x = 1; x <= X_max; ++x) {
        if (x % Q == 0) {
            s1.add(static_cast<double>(arith::euler_phi(x, sieve)) / static_cast<double>(x));
        }
        if (x > Q && std::gcd(x, Q) == 1) {
            s2.add(static_cast<double>(arith::euler_phi(x, sieve)) / static_cast<double>(x));
        }
        out[x] = 8.0 * (s1.value() + invQ * s2.value());
    }
    return out;
}

BigRational g_direct(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve) {
    if (Q == 0) throw RangeError("Q must be at least 1");
    if (X == 0) return BigRational{};
    require_range(Q * X, sieve);
    std::vector<mpq_class> terms;
    terms.reserve(X);
    for (std::uint64_t n = 1; n <= X; ++n) {
        const std::uint64_t m = Q * n;
        terms.emplace_back(static_cast<unsigned long>(arith::euler_phi(m, sieve)),
                           static_cast<unsigned long>(m));
    }
    return sum_terms(terms);
}

BigRational g_mobius(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve) {
    if (Q == 0) throw RangeError("Q must be at least 1");
    if (X == 0) return BigRational{};
    require_range(std::max(Q, X), sieve);
    std::vector<mpq_class> terms;
    for (std::uint64_t n = 1; n <= X; ++n) {
        if (std::gcd(n, Q) != 1) continue;
        const int mu = arith::mobius(n, sieve);
        if (mu == 0) continue;
        terms.emplace_back(mu * static_cast<long>(X / n), static_cast<unsigned long>(n));
    }
    return BigRational::from_u64(arith::euler_phi(Q, sieve), Q) * sum_terms(terms);
}

double euler_product_constant(std::uint64_t Q, const arith::FactorSieve& sieve) {
    // prod_{p | Q} (1 - p^-2) = phi(Q) psi(Q) / Q^2
    const auto f = sieve.factorize(Q);
    constexpr long double pi = std::numbers::pi_v<long double>;
    const auto q = static_cast<long double>(Q);
    return static_cast<double>(6.0L / (pi * pi) * q * q /
                               (static_cast<long double>(arith::euler_phi(f)) *
                                static_cast<long double>(arith::dedekind_psi(f))));
}

double euler_product_partial(std::uint64_t Q, std::uint64_t N, const arith::FactorSieve& sieve) {
    require_range(std::max(Q, N), sieve);
    CompensatedSum s;
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (std::gcd(n, Q) != 1) continue;
        const int mu = arith::mobius(n, sieve);
        if (mu == 0) continue;
        const double nd = static_cast<double>(n);
        s.add(mu / (nd * nd));
    }
    return s.value();
}

BigRational euler_product_partial_exact(std::uint64_t Q, std::uint64_t N,
                                        const arith::FactorSieve& sieve) {
    require_range(std::max(Q, N), sieve);
    std::vector<mpq_class> terms;
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (std::gcd(n, Q) != 1) continue;
        const int mu = arith::mobius(n, sieve);
        if (mu == 0) continue;
        mpz_class den = static_cast<unsigned long>(n);
        den *= static_cast<unsigned long>(n);
        terms.emplace_back(mpz_class(mu), den);
    }
    return sum_terms(terms);
}

double thm12_main_psi(std::uint64_t psi, std::uint64_t X) {
    return static_cast<double>(ninety_six_over_pi_squared() * static_cast<long double>(X) /
                               static_cast<long double>(psi));
}

double cor13_predict_psi(std::uint64_t psi, std::uint64_t X) {
    const auto x = static_cast<long double>(X);
    return static_cast<double>(ninety_six_over_pi_squared() * x * x / static_cast<long double>(psi));
}

double thm12_main(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve) {
    return thm12_main_psi(arith::dedekind_psi(Q, sieve), X);
}

double cor13_predict(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve) {
    return cor13_predict_psi(arith::dedekind_psi(Q, sieve), X);
}

MainTermReport main_term_report(std::uint64_t Q, std::uint64_t X,
                                const arith::FactorSieve& sieve) {
    MainTermReport r;
    r.Q = Q;
    r.X = X;
    r.F1 = f1(Q, X, sieve);
    r.F2 = f2(Q, X, sieve);
    r.F = BigRational(8) * (r.F1 + r.F2);
    r.psiQ = arith::dedekind_psi(Q, sieve);
    r.thm12_main = thm12_main_psi(r.psiQ, X);
    r.predicted = (BigRational::from_u64(X) * r.F).to_double();
    r.cor13_predicted = cor13_predict_psi(r.psiQ, X);
    return r;
}

ExponentFit fit_error_exponent(std::span<const ErrorSample> rows) {
    ExponentFit fit;
    std::vector<std::pair<double, double>> pts;
    std::set<double> xs;
    for (const auto& row : rows) {
        if (!(row.X > 0.0)) throw InsufficientData("X must be positive in every row");
        if (!xs.insert(row.X).second) throw InsufficientData("repeated X in error rows");
        if (row.abs_error == 0.0) {
            ++fit.dropped_zero;
            continue;
        }
        pts.emplace_back(std::log(row.X), std::log(std::fabs(row.abs_error)));
    }
    fit.used = pts.size();
    if (pts.size() < 3) {
        throw InsufficientData("need at least 3 rows with nonzero error, have " +
                               std::to_string(pts.size()));
    }
    const double n = static_cast<double>(pts.size());
    double mx = 0, my = 0;
    for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

}  // namespace gamma0::mainterm
