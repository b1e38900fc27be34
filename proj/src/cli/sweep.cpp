#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "gamma0/arith.hpp"
#include "gamma0/cli.hpp"
#include "gamma0/error.hpp"
#include "gamma0/mainterm.hpp"
#include "gamma0/rational.hpp"

namespace gamma0::cli {

std::uint64_t parse_height(const std::string& text) {
    if (text.empty() || text.front() == '-' || text.front() == '+') {
        throw InvalidQuery("height must be a nonnegative number, got '" + text + "'");
    }
    std::string fraction = text;
    if (const auto dot = text.find('.'); dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string digits = text.substr(dot + 1);
        const auto all_digits = [](const std::string& s) {
            return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
        };
        if (!all_digits(whole) || !all_digits(digits) || (whole.empty() && digits.empty())) {
            throw InvalidQuery("cannot parse height '" + text + "'");
        }
        fraction = (whole.empty() ? "0" : whole) + digits + "/1" + std::string(digits.size(), '0');
    }
    const mpz_class floored = BigRational::parse(fraction).floor();
    if (sgn(floored) < 0 || !floored.fits_ulong_p()) {
        throw RangeError("height '" + text + "' is out of range");
    }
    return floored.get_ui();
}

unsigned resolve_threads(std::optional<unsigned> flag) {
    if (flag) return std::max(1u, *flag);
    if (const char* env = std::getenv("CENSUS_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) return static_cast<unsigned>(v);
        throw InvalidQuery(std::string("CENSUS_THREADS must be a positive integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string format_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<std::uint64_t> sweep_heights(std::uint64_t x_start, std::uint64_t x_end,
                                         unsigned steps, Spacing spacing) {
    if (x_start < 1) throw InvalidQuery("x-start must be at least 1");
    if (x_start > x_end) throw InvalidQuery("x-start must not exceed x-end");
    if (steps < 1) throw InvalidQuery("steps must be at least 1");
    std::vector<std::uint64_t> xs;
    if (steps == 1) return {x_start};
    const double lo = static_cast<double>(x_start), hi = static_cast<double>(x_end);
    for (unsigned i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        double x;
        if (i == steps - 1) {
            x = hi;
        } else if (spacing == Spacing::Geometric) {
            x = lo * std::pow(hi / lo, t);
        } else {
            x = lo + (hi - lo) * t;
        }
        xs.push_back(static_cast<std::uint64_t>(std::llround(x)));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
    if (options.qs.empty()) throw InvalidQuery("q-list is empty");
    const auto xs = sweep_heights(options.x_start, options.x_end, options.steps, options.spacing);
    std::uint64_t limit = 2;
    for (const std::uint64_t q : options.qs) {
        if (q == 0) throw InvalidQuery("every Q must be at least 1");
        limit = std::max(limit, arith::default_sieve_limit(q, xs.back()));
    }
    const auto sieve = arith::build_sieve(limit);
    census::CensusOptions census_options;
    census_options.threads = options.threads;

    std::vector<SweepRow> rows;
    for (const std::uint64_t q : options.qs) {
        const auto profile = mainterm::f_total_profile(q, xs.back(), sieve);
        const std::uint64_t psi = arith::dedekind_psi(q, sieve);
        for (const std::uint64_t x : xs) {
            const auto result = census::count_exact(q, x, census_options);
            SweepRow row;
            row.Q = q;
            row.X = x;
            row.exact = result.total;
            row.boundary = result.boundary;
            row.predicted_cor13 = mainterm::cor13_predict_psi(psi, x);
            row.main_xF = static_cast<double>(x) * profile[x];
            row.ratio = static_cast<double>(row.exact) / row.predicted_cor13;
            row.abs_err_thm11 = std::fabs(static_cast<double>(row.exact) - row.main_xF);
            row.seconds = options.timing ? result.elapsed : 0.0;
            rows.push_back(row);
        }
    }
    return rows;
}

void write_csv(std::ostream& os, std::span<const SweepRow> rows) {
    os << kSweepHeader << '\n';
    for (const auto& r : rows) {
        os << r.Q << ',' << r.X << ',' << r.exact << ',' << r.boundary << ','
           << format_decimal(r.predicted_cor13) << ',' << format_decimal(r.main_xF) << ','
           << format_decimal(r.ratio) << ',' << format_decimal(r.abs_err_thm11) << ','
           << format_decimal(r.seconds) << '\n';
    }
}

}  // namespace gamma0::cli
