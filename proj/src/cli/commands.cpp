#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gamma0/arith.hpp"
#include "gamma0/cli.hpp"
#include "gamma0/error.hpp"
#include "gamma0/mainterm.hpp"
#include "json.hpp"

namespace gamma0::cli {

namespace {

using nlohmann::ordered_json;

struct CountArgs {
    std::uint64_t q = 0;
    std::string x;
    std::string method = "hyperbola";
    bool breakdown = false;
    bool json = false;
    std::optional<unsigned> threads;
    std::uint64_t naive_guard = census::kDefaultNaiveGuard;
};

struct PredictArgs {
    std::uint64_t q = 0;
    std::string x;
    bool json = false;
};

struct SweepArgs {
    std::vector<std::uint64_t> qs{1};
    std::string x_start = "100";
    std::string x_end = "1000";
    unsigned steps = 2;
    std::string spacing = "geometric";
    std::string out = "-";
    std::optional<unsigned> threads;
    bool timing = false;
};

struct VerifyArgs {
    VerifyOptions options;
    std::optional<unsigned> threads;
};

struct BenchArgs {
    std::uint64_t q = 1;
    std::string x;
    unsigned reps = 3;
    std::optional<unsigned> threads;
    std::uint64_t naive_guard = census::kDefaultNaiveGuard;
    bool json = false;
};

void require_q(std::uint64_t q) {
    if (q < 1) throw InvalidQuery("--q must be at least 1");
}

std::uint64_t require_x(const std::string& text) {
    const std::uint64_t x = parse_height(text);
    if (x < 1) throw InvalidQuery("--x must be at least 1 after flooring");
    return x;
}

int cmd_count(const CountArgs& a, std::ostream& out) {
    require_q(a.q);
    const std::uint64_t x = require_x(a.x);
    const auto method = census::parse_method(a.method);
    if (!method) throw InvalidQuery("unknown method '" + a.method + "'");
    census::CensusOptions opt;
    opt.threads = resolve_threads(a.threads);
    opt.naive_guard = a.naive_guard;
    const auto r = census::count(*method, a.q, x, opt);

    if (a.json) {
        ordered_json j;
        j["Q"] = r.Q;
        j["X"] = r.X;
        j["method"] = census::to_string(r.method);
        j["total"] = r.total;
        if (a.breakdown) {
            j["boundary"] = r.boundary;
            ordered_json classes = ordered_json::object();
            for (const auto& s : census::all_sign_classes()) classes[census::to_string(s)] = r.class_count(s);
            j["per_class"] = classes;
        }
        j["elapsed_seconds"] = r.elapsed;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "Q: " << r.Q << '\n'
        << "X: " << r.X << '\n'
        << "method: " << census::to_string(r.method) << '\n'
        << "total: " << r.total << '\n';
    if (a.breakdown) {
        out << "boundary: " << r.boundary << '\n';
        for (const auto& s : census::all_sign_classes()) {
            out << "class " << census::to_string(s) << ": " << r.class_count(s) << '\n';
        }
    }
    out << "elapsed_seconds: " << format_decimal(r.elapsed) << '\n';
    return kExitOk;
}

int cmd_predict(const PredictArgs& a, std::ostream& out) {
    require_q(a.q);
    const std::uint64_t x = require_x(a.x);
    const auto sieve = arith::build_sieve(arith::default_sieve_limit(a.q, x));
    const auto rep = mainterm::main_term_report(a.q, x, sieve);
    const BigRational xf = BigRational::from_u64(x) * rep.F;

    if (a.json) {
        ordered_json j;
        j["Q"] = rep.Q;
        j["X"] = rep.X;
        j["psi"] = rep.psiQ;
        j["F1"] = rep.F1.str();
        j["F1_decimal"] = rep.F1.to_double();
        j["F2"] = rep.F2.str();
        j["F2_decimal"] = rep.F2.to_double();
        j["F"] = rep.F.str();
        j["F_decimal"] = rep.F.to_double();
        j["XF"] = xf.str();
        j["XF_decimal"] = rep.predicted;
        j["thm12_main"] = rep.thm12_main;
        j["cor13_predicted"] = rep.cor13_predicted;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "Q: " << rep.Q << '\n'
        << "X: " << rep.X << '\n'
        << "psi: " << rep.psiQ << '\n'
        << "F1: " << rep.F1 << " = " << format_decimal(rep.F1.to_double()) << '\n'
        << "F2: " << rep.F2 << " = " << format_decimal(rep.F2.to_double()) << '\n'
        << "F: " << rep.F << " = " << format_decimal(rep.F.to_double()) << '\n'
        << "XF: " << xf << " = " << format_decimal(rep.predicted) << '\n'
        << "thm12_main: " << format_decimal(rep.thm12_main) << '\n'
        << "cor13_predicted: " << format_decimal(rep.cor13_predicted) << '\n';
    return kExitOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    SweepOptions opt;
    opt.qs = a.qs;
    opt.x_start = parse_height(a.x_start);
    opt.x_end = parse_height(a.x_end);
    opt.steps = a.steps;
    if (a.spacing == "geometric") {
        opt.spacing = Spacing::Geometric;
    } else if (a.spacing == "linear") {
        opt.spacing = Spacing::Linear;
    } else {
        throw InvalidQuery("--spacing must be geometric or linear");
    }
    opt.threads = resolve_threads(a.threads);
    opt.timing = a.timing;
    const auto rows = run_sweep(opt);

    if (a.out == "-") {
        write_csv(out, rows);
        return kExitOk;
    }
    std::ostringstream buf;
    write_csv(buf, rows);
    std::ofstream file(a.out, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + a.out + "' for writing");
    file << buf.str();
    file.flush();
    if (!file) throw IoError("failed writing '" + a.out + "'");
    out << "wrote " << rows.size() << " rows to " << a.out << '\n';
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const unsigned threads = resolve_threads(a.threads);
    const auto report = run_verify(a.options, default_backend(threads));
    for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cells << " cells)";
        if (!c.passed) out << ": first failing cell " << c.first_failure;
        out << '\n';
    }
    out << "verify: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    require_q(a.q);
    const std::uint64_t x = require_x(a.x);
    census::CensusOptions opt;
    opt.threads = resolve_threads(a.threads);
    opt.naive_guard = a.naive_guard;
    const auto rows = run_bench(a.q, x, a.reps, opt);

    if (a.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["method"] = census::to_string(r.method);
            j["Q"] = r.Q;
            j["X"] = r.X;
            j["refused"] = r.refused;
            if (r.refused) {
                j["note"] = r.note;
            } else {
                j["reps"] = r.reps;
                j["median_seconds"] = r.median_seconds;
                j["total"] = r.total;
            }
            arr.push_back(j);
        }
        out << arr.dump(2) << '\n';
        return kExitOk;
    }
    out << "method     Q        X  reps  median_seconds  total\n";
    for (const auto& r : rows) {
        char line[160];
        if (r.refused) {
            std::snprintf(line, sizeof line, "%-9s %3llu %8llu     -  refused (%s)\n",
                          census::to_string(r.method).c_str(), static_cast<unsigned long long>(r.Q),
                          static_cast<unsigned long long>(r.X), r.note.c_str());
        } else {
            std::snprintf(line, sizeof line, "%-9s %3llu %8llu  %4u  %14.6f  %llu\n",
                          census::to_string(r.method).c_str(), static_cast<unsigned long long>(r.Q),
                          static_cast<unsigned long long>(r.X), r.reps, r.median_seconds,
                          static_cast<unsigned long long>(r.total));
        }
        out << line;
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts and main terms for Gamma_0(Q) matrices of bounded height"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Exact #Gamma_0(Q, X)");
    count->add_option("--q", count_args.q, "Level Q >= 1")->required();
    count->add_option("--x", count_args.x, "Height bound X (floored if fractional)")->required();
    count->add_option("--method", count_args.method, "naive | bezout | hyperbola")
        ->check(CLI::IsMember({"naive", "bezout", "hyperbola"}));
    count->add_flag("--breakdown", count_args.breakdown, "Print boundary and sign-class counts");
    count->add_flag("--json", count_args.json, "JSON output");
    count->add_option("--threads", count_args.threads, "Worker threads (default: CENSUS_THREADS or all cores)");
    count->add_option("--naive-guard", count_args.naive_guard, "Largest X the naive method accepts");

    PredictArgs predict_args;
    auto* predict = app.add_subcommand("predict", "Main terms F1, F2, F and the asymptotic predictions");
    predict->add_option("--q", predict_args.q, "Level Q >= 1")->required();
    predict->add_option("--x", predict_args.x, "Height bound X")->required();
    predict->add_flag("--json", predict_args.json, "JSON output");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Exact counts against main terms over a grid, as CSV");
    sweep->add_option("--q-list", sweep_args.qs, "Comma-separated levels")->delimiter(',');
    sweep->add_option("--x-start", sweep_args.x_start, "Smallest X");
    sweep->add_option("--x-end", sweep_args.x_end, "Largest X");
    sweep->add_option("--steps", sweep_args.steps, "Number of heights");
    sweep->add_option("--spacing", sweep_args.spacing, "geometric | linear");
    sweep->add_option("--out", sweep_args.out, "Output CSV path, '-' for stdout");
    sweep->add_option("--threads", sweep_args.threads, "Worker threads");
    sweep->add_flag("--timing", sweep_args.timing,
                    "Fill the seconds column with wall time (output is then not reproducible)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Cross-check all counters and identities on small grids");
    verify->add_option("--max-q", verify_args.options.max_q, "Largest Q in the census grid");
    verify->add_option("--max-x", verify_args.options.max_x, "Largest X in the census grid");
    verify->add_option("--identity-max-q", verify_args.options.identity_max_q, "Largest Q in the G identity grid");
    verify->add_option("--identity-max-x", verify_args.options.identity_max_x, "Largest X in the G identity grid");
    verify->add_option("--threads", verify_args.threads, "Worker threads");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Median wall time of each counting method");
    bench->add_option("--q", bench_args.q, "Level Q >= 1");
    bench->add_option("--x", bench_args.x, "Height bound X")->required();
    bench->add_option("--reps", bench_args.reps, "Repetitions per method");
    bench->add_option("--threads", bench_args.threads, "Worker threads");
    bench->add_option("--naive-guard", bench_args.naive_guard, "Largest X the naive method accepts");
    bench->add_flag("--json", bench_args.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(count_args, out);
        if (predict->parsed()) return cmd_predict(predict_args, out);
        if (sweep->parsed()) return cmd_sweep(sweep_args, out);
        if (verify->parsed()) return cmd_verify(verify_args, out);
        if (bench->parsed()) return cmd_bench(bench_args, out);
    } catch (const InvalidQuery& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InsufficientData& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitRange;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kExitRange;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace gamma0::cli
