#include <algorithm>

#include "gamma0/cli.hpp"
#include "gamma0/error.hpp"

namespace gamma0::cli {

std::vector<BenchRow> run_bench(std::uint64_t Q, std::uint64_t X, unsigned reps,
                                const census::CensusOptions& options) {
    if (reps < 1) throw InvalidQuery("reps must be at least 1");
    std::vector<BenchRow> rows;
    for (const auto method : {census::Method::Naive, census::Method::Bezout, census::Method::Hyperbola}) {
        BenchRow row;
        row.method = method;
        row.Q = Q;
        row.X = X;
        if (method == census::Method::Naive && X > options.naive_guard) {
            row.refused = true;
            row.note = "X above naive guard " + std::to_string(options.naive_guard);
            rows.push_back(row);
            continue;
        }
        std::vector<double> times;
        for (unsigned i = 0; i < reps; ++i) {
            const auto r = census::count(method, Q, X, options);
            times.push_back(r.elapsed);
            row.total = r.total;
        }
        std::sort(times.begin(), times.end());
        const std::size_t mid = times.size() / 2;
        row.median_seconds = times.size() % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
        row.reps = reps;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gamma0::cli
