#include "gamma0/rational.hpp"

#include <ostream>

#include "gamma0/error.hpp"

namespace gamma0 {

namespace {

mpz_class from_u64_z(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

mpz_class from_i64_z(std::int64_t v) {
    if (v >= 0) return from_u64_z(static_cast<std::uint64_t>(v));
    // -(v + 1) + 1 avoids negating INT64_MIN.
    mpz_class z = from_u64_z(static_cast<std::uint64_t>(-(v + 1)));
    z += 1;
    return -z;
}

}  // namespace

BigRational::BigRational(std::int64_t n) : value_(from_i64_z(n)) {}

BigRational::BigRational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidQuery("BigRational: zero denominator");
    value_ = mpq_class(from_i64_z(num), from_i64_z(den));
    value_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : value_(q) {
    if (sgn(value_.get_den()) == 0) throw InvalidQuery("BigRational: zero denominator");
    value_.canonicalize();
}

BigRational BigRational::from_u64(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw InvalidQuery("BigRational: zero denominator");
    mpq_class q(from_u64_z(num), from_u64_z(den));
    q.canonicalize();
    return BigRational(q);
}

BigRational BigRational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
        throw InvalidQuery("BigRational: cannot parse '" + text + "'");
    }
    q.canonicalize();
    return BigRational(q);
}

std::string BigRational::numerator() const { return value_.get_num().get_str(); }
std::string BigRational::denominator() const { return value_.get_den().get_str(); }
std::string BigRational::str() const { return value_.get_str(); }

double BigRational::to_double() const { return value_.get_d(); }

mpz_class BigRational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw InvalidQuery("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.str(); }

}  // namespace gamma0
