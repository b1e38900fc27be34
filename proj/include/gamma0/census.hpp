#pragma once

// Exact counts of matrices in Gamma_0(Q), Gamma_1(Q) and Gamma(Q) with all
// entries bounded by X in absolute value.
//
// Three independent algorithms are provided for Gamma_0(Q, X):
//   naive      definitional triple loop over (a, c, b); tiny X only
//   bezout     one arithmetic progression of solutions per coprime (a, c)
//   hyperbola  boundary closed form + two sign classes via the modular
//              hyperbola kernel, the other six classes by sign-flip symmetry

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace gamma0::census {

/// Largest X accepted by any counter; keeps cQ * X + 1 inside 64 bits.
inline constexpr std::uint64_t kMaxHeight = 1'000'000'000;
inline constexpr std::uint64_t kDefaultNaiveGuard = 60;

/// Signs of (a, c, d). Members of a class have all four entries nonzero.
struct SignClass {
    int alpha = 1;
    int gamma = 1;
    int delta = 1;

    friend bool operator==(const SignClass&, const SignClass&) = default;
};

/// The eight classes in a fixed order; index() is the position in it.
const std::array<SignClass, 8>& all_sign_classes();
std::size_t index(const SignClass& s);
std::string to_string(const SignClass& s);

enum class Method { Naive, Bezout, Hyperbola };
std::string to_string(Method m);
/// Accepts "naive", "bezout", "hyperbola"; nullopt otherwise.
std::optional<Method> parse_method(const std::string& name);

struct CensusResult {
    std::uint64_t Q = 1;
    std::uint64_t X = 0;
    std::uint64_t total = 0;
    std::uint64_t boundary = 0;  // matrices with abcd = 0
    std::optional<std::array<std::uint64_t, 8>> per_class;  // by index(SignClass)
    Method method = Method::Hyperbola;
    double elapsed = 0.0;  // seconds

    std::uint64_t class_count(const SignClass& s) const;
};

struct CensusOptions {
    unsigned threads = 1;
    std::uint64_t naive_guard = kDefaultNaiveGuard;
};

/// Definitional oracle. Throws GuardRefusal when X > options.naive_guard.
CensusResult count_naive(std::uint64_t Q, std::uint64_t X, const CensusOptions& options = {});

/// Mid-scale oracle: O((X^2 / Q) log X).
CensusResult count_bezout(std::uint64_t Q, std::uint64_t X, const CensusOptions& options = {});

/// Matrices of class `s` (all entries nonzero), via the hyperbola kernel.
std::uint64_t count_sign_class(std::uint64_t Q, std::uint64_t X, const SignClass& s,
                               const CensusOptions& options = {});

/// Matrices with at least one zero entry, in closed form.
std::uint64_t count_boundary(std::uint64_t Q, std::uint64_t X);

/// boundary + 4 * (class(1,1,1) + class(1,1,-1)).
CensusResult count_exact(std::uint64_t Q, std::uint64_t X, const CensusOptions& options = {});

/// Gamma_1(Q): additionally a = d = 1 (mod Q).
std::uint64_t count_gamma1(std::uint64_t Q, std::uint64_t X, const CensusOptions& options = {});
/// Gamma(Q): additionally a = d = 1 and b = 0 (mod Q).
std::uint64_t count_gamma_full(std::uint64_t Q, std::uint64_t X,
                               const CensusOptions& options = {});

/// Dispatch on method.
CensusResult count(Method m, std::uint64_t Q, std::uint64_t X, const CensusOptions& options = {});

}  // namespace gamma0::census
