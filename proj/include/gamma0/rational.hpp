#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace gamma0 {

/// Exact fraction of arbitrary-precision integers, always in lowest terms
/// with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    BigRational(std::int64_t num, std::int64_t den);
    explicit BigRational(const mpq_class& q);

    static BigRational from_u64(std::uint64_t num, std::uint64_t den = 1);

    /// Parses "p" or "p/q".
    static BigRational parse(const std::string& text);

    std::string numerator() const;
    std::string denominator() const;
    std::string str() const;  // "p/q", or "p" when q == 1

    double to_double() const;
    /// Largest integer not above the value.
    mpz_class floor() const;

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    const mpq_class& raw() const noexcept { return value_; }

    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& q);

private:
    mpq_class value_;
};

}  // namespace gamma0
