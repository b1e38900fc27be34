#pragma once

// Main terms for #Gamma_0(Q, X):
//
//   F1(Q, X) = sum_{1 <= c <= X/Q} phi(cQ) / (cQ)
//   F2(Q, X) = (1/Q) sum_{Q < x <= X, gcd(x, Q) = 1} phi(x) / x
//   F(Q, X)  = 8 (F1 + F2)
//
// together with the closed-form approximations (96 / pi^2) X / psi(Q) for F
// and (96 / pi^2) X^2 / psi(Q) for the count. All signatures take (Q, X).

#include <cstdint>
#include <span>
#include <vector>

#include "gamma0/arith.hpp"
#include "gamma0/rational.hpp"

namespace gamma0::mainterm {

/// 96 / pi^2 in long double.
long double ninety_six_over_pi_squared();

BigRational f1(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve);
BigRational f2(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve);
BigRational f_total(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve);

/// F(Q, x) for every 0 <= x <= X_max in double, each prefix summed in fixed
/// ascending order with compensation, so values are reproducible bit for bit.
std::vector<double> f_total_profile(std::uint64_t Q, std::uint64_t X_max,
                                   const arith::FactorSieve& sieve);

/// G(Q, X) = sum_{1 <= n <= X} phi(Qn) / (Qn), term by term.
BigRational g_direct(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve);

/// G(Q, X) through phi(Q)/Q * sum_{n <= X, gcd(n,Q)=1} mu(n)/n * floor(X/n).
BigRational g_mobius(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve);

/// sum_{n >= 1, gcd(n,Q)=1} mu(n) / n^2 in closed form:
/// 6/pi^2 * prod_{p | Q} (1 - p^-2)^-1 = 6/pi^2 * Q^2 / (phi(Q) psi(Q)).
double euler_product_constant(std::uint64_t Q, const arith::FactorSieve& sieve);

/// The same series truncated at n <= N, compensated double summation.
double euler_product_partial(std::uint64_t Q, std::uint64_t N, const arith::FactorSieve& sieve);

/// Exact truncated series; denominators grow quickly, keep N small.
BigRational euler_product_partial_exact(std::uint64_t Q, std::uint64_t N,
                                        const arith::FactorSieve& sieve);

/// (96/pi^2) X / psi(Q).
double thm12_main(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve);
double thm12_main_psi(std::uint64_t psi, std::uint64_t X);

/// (96/pi^2) X^2 / psi(Q).
double cor13_predict(std::uint64_t Q, std::uint64_t X, const arith::FactorSieve& sieve);
double cor13_predict_psi(std::uint64_t psi, std::uint64_t X);

struct MainTermReport {
    std::uint64_t Q = 1;
    std::uint64_t X = 0;
    BigRational F1;
    BigRational F2;
    BigRational F;  // 8 (F1 + F2)
    std::uint64_t psiQ = 1;
    double thm12_main = 0.0;
    double predicted = 0.0;  // X * F
    double cor13_predicted = 0.0;
};

MainTermReport main_term_report(std::uint64_t Q, std::uint64_t X,
                                const arith::FactorSieve& sieve);

struct ErrorSample {
    double X;
    double abs_error;
};

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t used = 0;
    std::size_t dropped_zero = 0;
};

/// Least-squares line through (log X, log |err|). Zero errors are dropped and
/// counted; fewer than three usable rows or repeated X throws InsufficientData.
ExponentFit fit_error_exponent(std::span<const ErrorSample> rows);

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v);
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace gamma0::mainterm
