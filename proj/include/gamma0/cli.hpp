#pragma once

// Command-line surface. Each subcommand is backed by a plain function so the
// same code paths are reachable from tests without spawning a process.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamma0/census.hpp"

namespace gamma0::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitRange = 3,
    kExitIo = 4,
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Heights given as integers, decimals or p/q are floored; negative or
/// malformed text throws InvalidQuery.
std::uint64_t parse_height(const std::string& text);

/// Thread count: explicit flag, else CENSUS_THREADS, else hardware threads.
unsigned resolve_threads(std::optional<unsigned> flag);

/// Fixed-width decimal used in CSV cells: 10 significant digits.
std::string format_decimal(double v);

// ---------------------------------------------------------------- sweep

enum class Spacing { Geometric, Linear };

struct SweepOptions {
    std::vector<std::uint64_t> qs{1};
    std::uint64_t x_start = 100;
    std::uint64_t x_end = 1000;
    unsigned steps = 2;
    Spacing spacing = Spacing::Geometric;
    unsigned threads = 1;
    bool timing = false;  // record wall time in the seconds column
};

struct SweepRow {
    std::uint64_t Q = 1;
    std::uint64_t X = 0;
    std::uint64_t exact = 0;
    std::uint64_t boundary = 0;
    double predicted_cor13 = 0.0;
    double main_xF = 0.0;
    double ratio = 0.0;
    double abs_err_thm11 = 0.0;
    double seconds = 0.0;
};

inline constexpr const char* kSweepHeader =
    "Q,X,exact,boundary,predicted_cor13,main_xF,ratio,abs_err_thm11,seconds";

/// Distinct heights in ascending order.
std::vector<std::uint64_t> sweep_heights(std::uint64_t x_start, std::uint64_t x_end,
                                         unsigned steps, Spacing spacing);

std::vector<SweepRow> run_sweep(const SweepOptions& options);
void write_csv(std::ostream& os, std::span<const SweepRow> rows);

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::uint64_t max_q = 6;
    std::uint64_t max_x = 40;
    std::uint64_t identity_max_q = 30;
    std::uint64_t identity_max_x = 200;
    unsigned threads = 1;
};

/// Counting functions under test. Tests substitute faulty ones to check that
/// the harness reports them.
struct VerifyBackend {
    std::function<census::CensusResult(std::uint64_t, std::uint64_t)> naive;
    std::function<census::CensusResult(std::uint64_t, std::uint64_t)> bezout;
    std::function<census::CensusResult(std::uint64_t, std::uint64_t)> hyperbola;
};

VerifyBackend default_backend(unsigned threads = 1);

struct CheckOutcome {
    std::string name;
    bool passed = true;
    std::uint64_t cells = 0;
    std::string first_failure;  // empty when passed
};

struct VerifyReport {
    std::vector<CheckOutcome> checks;
    bool passed() const;
};

VerifyReport run_verify(const VerifyOptions& options, const VerifyBackend& backend);

// ---------------------------------------------------------------- bench

struct BenchRow {
    census::Method method;
    std::uint64_t Q = 1;
    std::uint64_t X = 0;
    unsigned reps = 0;
    bool refused = false;
    std::string note;
    double median_seconds = 0.0;
    std::uint64_t total = 0;
};

std::vector<BenchRow> run_bench(std::uint64_t Q, std::uint64_t X, unsigned reps,
                                const census::CensusOptions& options);

}  // namespace gamma0::cli
