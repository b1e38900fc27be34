#include "gamma0/census.hpp"

#include <chrono>
#include <cstdlib>

#include "gamma0/error.hpp"
#include "gamma0/hyperbola.hpp"
#include "parallel.hpp"

namespace gamma0::census {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

struct Tally {
    std::uint64_t total = 0;
    std::uint64_t boundary = 0;
    std::array<std::uint64_t, 8> cls{};

    Tally& operator+=(const Tally& o) {
        total += o.total;
        boundary += o.boundary;
        for (std::size_t i = 0; i < cls.size(); ++i) cls[i] += o.cls[i];
        return *this;
    }
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void validate(std::uint64_t Q, std::uint64_t X) {
    if (Q == 0) throw RangeError("Q must be at least 1");
    if (X > kMaxHeight) {
        throw OverflowError("X = " + std::to_string(X) + " exceeds the supported maximum " +
                            std::to_string(kMaxHeight));
    }
}

int sign_of(i64 v) { return (v > 0) - (v < 0); }

std::size_t class_index(int alpha, int gamma, int delta) {
    return static_cast<std::size_t>((alpha < 0) * 4 + (gamma < 0) * 2 + (delta < 0));
}

void record(Tally& t, i64 a, i64 b, i64 c, i64 d) {
    ++t.total;
    if (a == 0 || b == 0 || c == 0 || d == 0) {
        ++t.boundary;
        return;
    }
    ++t.cls[class_index(sign_of(a), sign_of(c), sign_of(d))];
}

CensusResult finish(std::uint64_t Q, std::uint64_t X, Method m, const Tally& t,
                    const Stopwatch& watch) {
    CensusResult r;
    r.Q = Q;
    r.X = X;
    r.total = t.total;
    r.boundary = t.boundary;
    r.per_class = t.cls;
    r.method = m;
    r.elapsed = watch.seconds();
    return r;
}

i128 floor_div(i128 n, i128 d) {
    i128 q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

i128 ceil_div(i128 n, i128 d) { return -floor_div(-n, d); }

// Closed range of t, possibly empty (lo > hi).
struct Range {
    i128 lo;
    i128 hi;

    Range intersect(const Range& o) const { return {std::max(lo, o.lo), std::min(hi, o.hi)}; }
};

constexpr i128 kUnbounded = static_cast<i128>(1) << 100;

// t with lo <= base + t * step <= hi.
Range solve(i128 base, i128 step, i128 lo, i128 hi) {
    if (step == 0) {
        return base >= lo && base <= hi ? Range{-kUnbounded, kUnbounded} : Range{1, 0};
    }
    if (step > 0) return {ceil_div(lo - base, step), floor_div(hi - base, step)};
    return {ceil_div(hi - base, step), floor_div(lo - base, step)};
}

// Number of t in r with t = residue (mod modulus); modulus 1 means no constraint.
std::uint64_t count_in(const Range& r, i128 modulus, i128 residue) {
    if (r.lo > r.hi) return 0;
    if (r.hi - r.lo > 2 * kUnbounded - 4) throw Error("unbounded fiber");
    if (modulus == 1) return static_cast<std::uint64_t>(r.hi - r.lo + 1);
    const i128 first = r.lo + ((residue - r.lo) % modulus + modulus) % modulus;
    if (first > r.hi) return 0;
    return static_cast<std::uint64_t>((r.hi - first) / modulus + 1);
}

// Solutions (x, y) of a x + c y = gcd(a, c) for a, c >= 0.
void ext_gcd(i64 a, i64 c, i64& g, i64& x, i64& y) {
    i64 old_r = a, r = c, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    g = old_r;
    x = old_s;
    y = old_t;
}

// The fiber over a coprime (a, c): b = b0 + t a, d = d0 + t c.
struct Fiber {
    i128 a, c, b0, d0;
};

std::optional<Fiber> make_fiber(i64 a, i64 c) {
    i64 g, x, y;
    ext_gcd(std::llabs(a), std::llabs(c), g, x, y);
    if (g != 1) return std::nullopt;
    // |a| x + |c| y = 1  =>  a (sgn(a) x) - (-(sgn(c) y)) c = 1
    const i64 d0 = a < 0 ? -x : x;
    const i64 b0 = -(c < 0 ? -y : y);
    return Fiber{a, c, b0, d0};
}

// t with b in [blo, bhi] and d in [dlo, dhi], optionally t = residue mod modulus.
std::uint64_t fiber_count(const Fiber& f, i128 blo, i128 bhi, i128 dlo, i128 dhi,
                          i128 modulus = 1, i128 residue = 0) {
    const Range r = solve(f.b0, f.a, blo, bhi).intersect(solve(f.d0, f.c, dlo, dhi));
    return count_in(r, modulus, residue);
}

template <typename Body>
Tally over_c(std::uint64_t Q, std::uint64_t X, unsigned threads, Body body) {
    const auto K = static_cast<i64>(X / Q);
    const auto n = static_cast<std::uint64_t>(2 * K + 1);
    return detail::parallel_strided<Tally>(n, threads, [&](std::uint64_t i, Tally& acc) {
        const i64 c = (static_cast<i64>(i) - K) * static_cast<i64>(Q);
        body(c, acc);
    });
}

std::uint64_t bezout_filtered(std::uint64_t Q, std::uint64_t X, unsigned threads,
                              bool fix_b) {
    const i64 Xs = static_cast<i64>(X);
    const i64 Qs = static_cast<i64>(Q);
    const Tally t = over_c(Q, X, threads, [&](i64 c, Tally& acc) {
        for (i64 a = -Xs; a <= Xs; ++a) {
            if (((a % Qs) + Qs) % Qs != 1 % Qs) continue;
            const auto f = make_fiber(a, c);
            if (!f) continue;
            // a = 1 (mod Q) so b = b0 + t a = 0 (mod Q) iff t = -b0 (mod Q).
            const i128 modulus = fix_b ? Qs : 1;
            const i128 residue = fix_b ? ((-f->b0) % Qs + Qs) % Qs : 0;
            acc.total += fiber_count(*f, -Xs, Xs, -Xs, Xs, modulus, residue);
        }
    });
    return t.total;
}

std::uint64_t class_111(std::uint64_t Q, std::uint64_t X, unsigned threads) {
    const std::uint64_t K = X / Q;
    const Tally t = detail::parallel_strided<Tally>(K, threads, [&](std::uint64_t i, Tally& acc) {
        const std::uint64_t cq = (i + 1) * Q;
        // ad = 1 + b cQ with 1 <= b <= X; drop a = d = 1, which has b = 0.
        acc.total += hyperbola::count_product_bounded(cq, 1, X, cq * X + 1) - 1;
    });
    return t.total;
}

std::uint64_t class_11m1(std::uint64_t Q, std::uint64_t X, unsigned threads) {
    const std::uint64_t K = X / Q;
    const Tally t = detail::parallel_strided<Tally>(K, threads, [&](std::uint64_t i, Tally& acc) {
        const std::uint64_t cq = (i + 1) * Q;
        // d' = -d, b' = -b: a d' + 1 = b' cQ with 1 <= b' <= X.
        acc.total += hyperbola::count_product_bounded(cq, cq - 1, X, cq * X - 1);
    });
    return t.total;
}

}  // namespace

const std::array<SignClass, 8>& all_sign_classes() {
    static const std::array<SignClass, 8> classes = [] {
        std::array<SignClass, 8> out{};
        for (int alpha : {1, -1}) {
            for (int gamma : {1, -1}) {
                for (int delta : {1, -1}) out[class_index(alpha, gamma, delta)] = {alpha, gamma, delta};
            }
        }
        return out;
    }();
    return classes;
}

std::size_t index(const SignClass& s) { return class_index(s.alpha, s.gamma, s.delta); }

std::string to_string(const SignClass& s) {
    auto sym = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
    return "(" + sym(s.alpha) + "," + sym(s.gamma) + "," + sym(s.delta) + ")";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Naive: return "naive";
        case Method::Bezout: return "bezout";
        case Method::Hyperbola: return "hyperbola";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& name) {
    if (name == "naive") return Method::Naive;
    if (name == "bezout") return Method::Bezout;
    if (name == "hyperbola") return Method::Hyperbola;
    return std::nullopt;
}

std::uint64_t CensusResult::class_count(const SignClass& s) const {
    if (!per_class) throw Error("per-class breakdown not populated");
    return (*per_class)[index(s)];
}

CensusResult count_naive(std::uint64_t Q, std::uint64_t X, const CensusOptions& options) {
    validate(Q, X);
    if (X > options.naive_guard) {
        throw GuardRefusal("naive method refuses X = " + std::to_string(X) + " above guard " +
                           std::to_string(options.naive_guard) + "; use bezout or hyperbola");
    }
    const Stopwatch watch;
    const i64 Xs = static_cast<i64>(X);
    const Tally t = over_c(Q, X, 1, [&](i64 c, Tally& acc) {
        for (i64 a = -Xs; a <= Xs; ++a) {
            for (i64 b = -Xs; b <= Xs; ++b) {
                const i64 num = 1 + b * c;  // = a d
                if (a == 0) {
                    if (num != 0) continue;
                    for (i64 d = -Xs; d <= Xs; ++d) record(acc, a, b, c, d);
                    continue;
                }
                if (num % a != 0) continue;
                const i64 d = num / a;
                if (d < -Xs || d > Xs) continue;
                record(acc, a, b, c, d);
            }
        }
    });
    return finish(Q, X, Method::Naive, t, watch);
}

CensusResult count_bezout(std::uint64_t Q, std::uint64_t X, const CensusOptions& options) {
    validate(Q, X);
    const Stopwatch watch;
    const i64 Xs = static_cast<i64>(X);
    const Tally t = over_c(Q, X, options.threads, [&](i64 c, Tally& acc) {
        for (i64 a = -Xs; a <= Xs; ++a) {
            const auto f = make_fiber(a, c);
            if (!f) continue;
            const std::uint64_t all = fiber_count(*f, -Xs, Xs, -Xs, Xs);
            if (all == 0) continue;
            acc.total += all;
            if (a == 0 || c == 0) {
                acc.boundary += all;
                continue;
            }
            const std::uint64_t pos = fiber_count(*f, 1, Xs, 1, Xs) +
                                      fiber_count(*f, -Xs, -1, 1, Xs);
            const std::uint64_t neg = fiber_count(*f, 1, Xs, -Xs, -1) +
                                      fiber_count(*f, -Xs, -1, -Xs, -1);
            acc.boundary += all - pos - neg;
            acc.cls[class_index(sign_of(a), sign_of(c), 1)] += pos;
            acc.cls[class_index(sign_of(a), sign_of(c), -1)] += neg;
        }
    });
    return finish(Q, X, Method::Bezout, t, watch);
}

std::uint64_t count_sign_class(std::uint64_t Q, std::uint64_t X, const SignClass& s,
                               const CensusOptions& options) {
    validate(Q, X);
    if (Q > X) return 0;
    // (a, b, c, d) -> (-a, b, c, -d) and (a, -b, -c, d) preserve the
    // determinant, the height and Q | c; they connect every class with
    // delta = alpha to (1,1,1) and every class with delta = -alpha to (1,1,-1).
    return s.delta == s.alpha ? class_111(Q, X, options.threads)
                              : class_11m1(Q, X, options.threads);
}

std::uint64_t count_boundary(std::uint64_t Q, std::uint64_t X) {
    validate(Q, X);
    if (X == 0) return 0;
    // c = 0: a = d = +-1, any b.
    std::uint64_t n = 2 * (2 * X + 1);
    // b = 0, c != 0: a = d = +-1, c a nonzero multiple of Q.
    n += 2 * 2 * (X / Q);
    if (Q == 1) {
        // a = 0, b c = -1 (so b, c != 0): two (b, c) pairs, any d.
        n += 2 * (2 * X + 1);
        // d = 0, a != 0, b c = -1: two (b, c) pairs, any nonzero a.
        n += 2 * (2 * X);
    }
    return n;
}

CensusResult count_exact(std::uint64_t Q, std::uint64_t X, const CensusOptions& options) {
    validate(Q, X);
    const Stopwatch watch;
    Tally t;
    t.boundary = count_boundary(Q, X);
    const std::uint64_t same = count_sign_class(Q, X, {1, 1, 1}, options);
    const std::uint64_t flip = count_sign_class(Q, X, {1, 1, -1}, options);
    for (const SignClass& s : all_sign_classes()) {
        t.cls[index(s)] = s.delta == s.alpha ? same : flip;
    }
    t.total = t.boundary + 4 * (same + flip);
    return finish(Q, X, Method::Hyperbola, t, watch);
}

std::uint64_t count_gamma1(std::uint64_t Q, std::uint64_t X, const CensusOptions& options) {
    validate(Q, X);
    return bezout_filtered(Q, X, options.threads, false);
}

std::uint64_t count_gamma_full(std::uint64_t Q, std::uint64_t X, const CensusOptions& options) {
    validate(Q, X);
    return bezout_filtered(Q, X, options.threads, true);
}

CensusResult count(Method m, std::uint64_t Q, std::uint64_t X, const CensusOptions& options) {
    switch (m) {
        case Method::Naive: return count_naive(Q, X, options);
        case Method::Bezout: return count_bezout(Q, X, options);
        case Method::Hyperbola: return count_exact(Q, X, options);
    }
    throw Error("unknown method");
}

}  // namespace gamma0::census
