#include "kepler/cli.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kepler/alpha.hpp"
#include "kepler/errors.hpp"
#include "kepler/lookup.hpp"
#include "kepler/solver.hpp"
#include "kepler/starters.hpp"
#include "kepler/sweep.hpp"
#include "kepler/verify.hpp"

namespace kepler {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

StarterKind require_starter(const std::string& name) {
    const auto kind = parse_starter_kind(name);
    if (!kind || *kind == StarterKind::Table) {
        std::string known;
        for (StarterKind k : all_starter_kinds()) {
            if (!known.empty()) known += ", ";
            known += to_string(k);
        }
        throw DomainError("unknown starter '" + name + "' (known: " + known + ")");
    }
    return *kind;
}

struct SolveArgs {
    double e = 0.0;
    double m_raw = 0.0;
    std::optional<int> digits;
    std::optional<double> tol;
    bool json = false;
};

int run_solve(const SolveArgs& a, std::ostream& out) {
    SolveMode mode = ResidualTolerance{};
    if (a.digits) mode = Digits{*a.digits};
    if (a.tol) mode = ResidualTolerance{*a.tol};
    const SolveResult r = solve(a.e, a.m_raw, mode);
    if (a.json) {
        nlohmann::json j;
        j["e"] = a.e;
        j["m_raw"] = a.m_raw;
        j["E"] = r.E;
        j["iterations"] = r.iterations;
        j["residual"] = r.residual;
        j["starter_branch"] = std::string(to_string(r.starter.branch));
        j["certified"] = r.certified;
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "E=" << real(r.E) << '\n'
        << "iterations=" << r.iterations << '\n'
        << "residual=" << real(r.residual) << '\n'
        << "starter=" << real(r.starter.value) << " branch=" << to_string(r.starter.branch) << '\n'
        << "certified=" << (r.certified ? "true" : "false") << '\n';
    if (r.digits_capped) out << "note: digits capped at " << kMaxBinary64Digits << " (binary64)\n";
    return kExitOk;
}

int run_alpha(double e, double m, const std::string& starter_name, std::ostream& out) {
    const StarterKind kind = require_starter(starter_name);
    const OrbitPoint p(e, m);
    const StarterValue s = evaluate_starter(kind, p);
    const AlphaReport r = alpha_test(p, s.value);
    out << "starter=" << to_string(kind) << " value=" << real(s.value)
        << " branch=" << to_string(s.branch) << '\n'
        << "beta=" << real(r.beta) << '\n'
        << "gamma=" << real(r.gamma) << " argmax_k=" << r.gamma_argmax_k << '\n'
        << "alpha=" << real(r.alpha) << " alpha0=" << real(alpha0()) << '\n'
        << "passes=" << (r.passes ? "true" : "false") << '\n';
    return kExitOk;
}

struct SweepArgs {
    std::string starter;
    int grid = 1000;
    std::string out_path;
    std::string format = "csv";
    std::string mask_path;
    unsigned threads = 0;
};

int run_sweep(const SweepArgs& a, std::ostream& out) {
    const StarterKind kind = require_starter(a.starter);
    const RegionMap map = sweep(kind, a.grid, a.threads);
    if (a.format == "pgm") {
        write_to_file(a.out_path, [&](std::ostream& o) { write_region_pgm(map, o); });
    } else {
        write_to_file(a.out_path, [&](std::ostream& o) { write_region_csv(map, o); });
    }
    if (!a.mask_path.empty()) {
        write_to_file(a.mask_path, [&](std::ostream& o) { write_region_mask_csv(map, o); });
    }
    const SweepSummary s = summarize(map);
    out << "starter=" << to_string(kind) << " grid=" << a.grid << " cells=" << s.cells
        << " passing=" << s.passing << " not_applicable=" << s.not_applicable
        << " pass_fraction=" << real(s.pass_fraction)
        << " corner_failures=" << s.corner_failures.size() << '\n';
    return kExitOk;
}

int run_table_gen(double eps, const std::string& path, const std::string& json_path,
                  std::ostream& out) {
    const LookupTable t = build_table(eps);
    save_table(t, path);
    if (!json_path.empty()) {
        write_to_file(json_path, [&](std::ostream& o) { write_table_json(t, o); });
    }
    out << "eps=" << real(t.eps()) << " N=" << t.N() << " entries=" << t.entries().size()
        << " bytes=" << kTableHeaderBytes + 8 * t.entries().size() << '\n';
    return kExitOk;
}

int run_table_query(const std::string& path, double e, double m, std::ostream& out) {
    const LookupTable t = load_table(path);
    const OrbitPoint p(e, m);
    const StarterValue s = table_starter(t, p);
    const AlphaReport r = alpha_test(p, s.value);
    out << "starter=" << real(s.value) << " branch=" << to_string(s.branch)
        << " alpha=" << real(r.alpha) << " passes=" << (r.passes ? "true" : "false") << '\n';
    return kExitOk;
}

int run_verify(const std::string& suite, const VerifyOptions& options, std::ostream& out) {
    const VerifyReport r = run_suite(suite, options);
    for (const auto& line : r.lines) out << line << '\n';
    out << "suite=" << r.suite << " checked=" << r.checked << " failures=" << r.failures << ' '
        << (r.passed ? "PASS" : "FAIL") << '\n';
    return r.passed ? kExitOk : kExitVerifyFailed;
}

int run_bench(int grid, unsigned threads, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    auto seconds = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double>(b - a).count();
    };
    for (StarterKind kind : {StarterKind::Thm1, StarterKind::S10}) {
        const auto t0 = clock::now();
        const SweepSummary s = summarize(sweep(kind, grid, threads));
        const auto t1 = clock::now();
        out << "sweep " << to_string(kind) << " grid=" << grid << " cells=" << s.cells
            << " pass_fraction=" << real(s.pass_fraction) << " seconds=" << seconds(t0, t1)
            << '\n';
    }
    const auto t0 = clock::now();
    double checksum = 0.0;
    long long solves = 0;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j <= grid; ++j) {
            checksum += solve(static_cast<double>(i) / grid, kPi * j / grid, Digits{15}).E;
            ++solves;
        }
    }
    const auto t1 = clock::now();
    const double dt = seconds(t0, t1);
    out << "solve digits=15 count=" << solves << " seconds=" << dt
        << " ns_per_solve=" << (dt * 1e9 / static_cast<double>(solves))
        << " checksum=" << real(checksum) << '\n';
    return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified Kepler equation solver and alpha-test toolkit", "kepler"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve E - e sin E = M for any mean anomaly");
    solve_cmd->add_option("--e", solve_args.e, "Eccentricity in [0, 1)")->required();
    solve_cmd->add_option("--m-raw", solve_args.m_raw, "Mean anomaly in radians (any finite value)")
        ->required();
    auto* digits_opt = solve_cmd->add_option("--digits", solve_args.digits,
                                             "Run the Newton budget for 10^-N accuracy");
    auto* tol_opt = solve_cmd->add_option("--tol", solve_args.tol, "Iterate until |f(E)| <= T");
    digits_opt->excludes(tol_opt);
    solve_cmd->add_flag("--json", solve_args.json, "Single-line JSON output");

    double alpha_e = 0.0;
    double alpha_m = 0.0;
    std::string alpha_starter;
    auto* alpha_cmd = app.add_subcommand("alpha", "alpha-test report for one starter");
    alpha_cmd->add_option("--e", alpha_e, "Eccentricity in [0, 1)")->required();
    alpha_cmd->add_option("--m", alpha_m, "Mean anomaly in [0, pi]")->required();
    alpha_cmd->add_option("--starter", alpha_starter, "Starter name (s1..s10, thm1, ...)")
        ->required();

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "alpha-test every node of a grid");
    sweep_cmd->add_option("--starter", sweep_args.starter, "Starter name")->required();
    sweep_cmd->add_option("--grid", sweep_args.grid, "Points per axis")->required();
    sweep_cmd->add_option("--out", sweep_args.out_path, "Output path")->required();
    sweep_cmd->add_option("--format", sweep_args.format, "csv or pgm")
        ->check(CLI::IsMember({"csv", "pgm"}));
    sweep_cmd->add_option("--mask", sweep_args.mask_path,
                          "Also write the certified-region mask as CSV");
    sweep_cmd->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)");

    auto* table_cmd = app.add_subcommand("table", "Lookup-table starter");
    table_cmd->require_subcommand(1);
    double gen_eps = 0.1;
    std::string gen_out;
    std::string gen_json;
    auto* gen_cmd = table_cmd->add_subcommand("gen", "Build and save a table");
    gen_cmd->add_option("--eps", gen_eps, "Excluded corner size, 0 < eps < 1")->required();
    gen_cmd->add_option("--out", gen_out, "Binary table path")->required();
    gen_cmd->add_option("--json", gen_json, "Also export JSON to this path");
    std::string query_path;
    double query_e = 0.0;
    double query_m = 0.0;
    auto* query_cmd = table_cmd->add_subcommand("query", "Starter from a saved table");
    query_cmd->add_option("--table", query_path, "Binary table path")->required();
    query_cmd->add_option("--e", query_e, "Eccentricity in [0, 1)")->required();
    query_cmd->add_option("--m", query_m, "Mean anomaly in [0, pi]")->required();

    std::string suite;
    VerifyOptions verify_options;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "regions, contraction, thm1, corner or lookup")
        ->required()
        ->check(CLI::IsMember({"regions", "contraction", "thm1", "corner", "lookup"}));
    verify_cmd->add_option("--samples", verify_options.samples, "Sample count (suite default if 0)");
    verify_cmd->add_option("--seed", verify_options.seed, "Seed for randomized suites");
    verify_cmd->add_option("--threads", verify_options.threads, "Worker threads (0 = all cores)");

    int bench_grid = 1000;
    unsigned bench_threads = 0;
    auto* bench_cmd = app.add_subcommand("bench", "Time sweeps and batch solves");
    bench_cmd->add_option("--grid", bench_grid, "Points per axis")->required();
    bench_cmd->add_option("--threads", bench_threads, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*solve_cmd) return run_solve(solve_args, out);
        if (*alpha_cmd) return run_alpha(alpha_e, alpha_m, alpha_starter, out);
        if (*sweep_cmd) return run_sweep(sweep_args, out);
        if (*gen_cmd) return run_table_gen(gen_eps, gen_out, gen_json, out);
        if (*query_cmd) return run_table_query(query_path, query_e, query_m, out);
        if (*verify_cmd) return run_verify(suite, verify_options, out);
        if (*bench_cmd) return run_bench(bench_grid, bench_threads, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace kepler
