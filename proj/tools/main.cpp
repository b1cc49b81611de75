#include "sqgsteady/dynamics.hpp"
#include "sqgsteady/errors.hpp"
#include "sqgsteady/simd/kernels.hpp"
#include "sqgsteady/solution_io.hpp"
#include "sqgsteady/solver.hpp"
#include "sqgsteady/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

using sqgsteady::Family;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNonConvergence = 2;
constexpr int kExitBadConfig = 3;
constexpr int kExitVerificationFailure = 4;
constexpr int kExitBlowUp = 5;

struct GlobalOptions {
    unsigned seed = 12345;
    int threads = 0; // 0 = auto
};

std::string joined_command(int argc, char** argv) {
    std::string cmd;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) cmd += ' ';
        const std::string arg = argv[i];
        if (arg.find(' ') != std::string::npos)
            cmd += '"' + arg + '"';
        else
            cmd += arg;
    }
    return cmd;
}

// --threads wins, then SQGSTEADY_THREADS, then the hardware count.
int resolved_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SQGSTEADY_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void write_run_manifest(const std::string& command, const ordered_json& config,
                        double duration_seconds, const std::vector<std::string>& outputs,
                        const std::string& anchor_path) {
    sqgsteady::RunManifest m;
    m.command = command;
    m.config_json = config.dump();
    m.duration_seconds = duration_seconds;
    m.outputs = outputs;
    sqgsteady::write_manifest(m, anchor_path + ".manifest.json");
}

Family family_from_cli(const std::string& name) {
    if (name == "sqg") return Family::sqg_folded;
    if (name == "degregorio") return Family::degregorio;
    throw sqgsteady::config_error("unknown family '" + name + "', expected sqg or degregorio");
}

void print_record(const sqgsteady::CheckRecord& r) {
    std::printf("%s  %-44s measured=%.6e threshold=%.6e [%s]\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.measured, r.threshold, r.basis.c_str());
}

int run_solve(const std::string& command, const GlobalOptions& global,
              const std::string& family_name, int m, double alpha, int modes, int grid,
              double tol, int max_iter, double damping, bool symmetry, double m_cap,
              const std::string& out_path) {
    sqgsteady::SolverConfig cfg;
    cfg.family = family_from_cli(family_name);
    cfg.m = m;
    cfg.alpha = alpha;
    cfg.modes = modes;
    cfg.grid = grid;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    cfg.damping = damping;
    cfg.symmetry = symmetry;
    cfg.m_cap = m_cap;
    cfg.validate();

    ordered_json config{{"command", "solve"},
                        {"family", family_name},
                        {"m", cfg.m},
                        {"alpha", cfg.alpha},
                        {"modes", cfg.modes},
                        {"grid", cfg.grid},
                        {"tol", cfg.tol},
                        {"max_iter", cfg.max_iter},
                        {"damping", cfg.damping},
                        {"symmetry", cfg.symmetry},
                        {"m_cap", cfg.m_cap},
                        {"seed", global.seed},
                        {"threads", resolved_threads(global.threads)},
                        {"simd", sqgsteady::simd::active().name}};

    const auto t0 = std::chrono::steady_clock::now();
    bool converged = true;
    sqgsteady::SolutionBundle bundle;
    try {
        bundle = sqgsteady::solve(cfg);
    } catch (const sqgsteady::nonconvergence_error& e) {
        std::fprintf(stderr, "warning: %s\n", e.what());
        bundle = e.last_bundle;
        converged = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    sqgsteady::write_solution(bundle, out_path);
    write_run_manifest(command, config, seconds, {out_path}, out_path);

    std::printf("family=%s m=%d alpha=%.17g modes=%d grid=%d\n",
                sqgsteady::family_name(bundle.family), bundle.m, bundle.alpha, bundle.modes,
                bundle.grid);
    std::printf("lambda=%.17g gamma=%.17g\n", bundle.lambda, bundle.gamma);
    std::printf("iterations=%d update_norm=%.6e fixed_point_residual=%.6e clamped_mass=%.6e\n",
                bundle.diagnostics.iterations, bundle.diagnostics.update_norm,
                bundle.diagnostics.fixed_point_residual, bundle.diagnostics.clamped_mass);
    std::printf("wrote %s (%.2fs)\n", out_path.c_str(), seconds);
    return converged ? kExitOk : kExitNonConvergence;
}

int run_verify(const std::string& command, const GlobalOptions& global, const std::string& suite,
               const std::vector<int>& m_list, const std::string& solution_path,
               const std::string& report_path) {
    sqgsteady::LemmaTolerances tol;
    tol.seed = global.seed;

    sqgsteady::VerificationReport report;
    // A supplied solution joins its residual checks to whatever suite runs, so
    // a doctored bundle fails even under the analytic suites.
    const bool wants_residual = suite == "residual" || !solution_path.empty();
    const bool wants_lemmas = suite != "residual";

    if (wants_lemmas) {
        const sqgsteady::VerificationReport full = sqgsteady::run_lemma_suite(m_list, tol);
        if (suite == "identity")
            report = sqgsteady::filter_report(full, "identity/");
        else if (suite == "kernel")
            report = sqgsteady::filter_report(full, "kernel/");
        else if (suite == "lemmas")
            report = sqgsteady::filter_report(full, "lemma/");
        else if (suite == "all")
            report = full;
        else
            throw sqgsteady::config_error("unknown suite '" + suite + "'");
    }
    if (wants_residual) {
        if (solution_path.empty())
            throw sqgsteady::config_error("--suite residual requires --solution");
        const sqgsteady::SolutionBundle bundle = sqgsteady::read_solution(solution_path);
        const sqgsteady::VerificationReport res = sqgsteady::run_residual_suite(bundle);
        report.records.insert(report.records.end(), res.records.begin(), res.records.end());
    }
    report.suite = suite;

    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& r : report.records) print_record(r);
    std::printf("%zu checks, overall %s\n", report.records.size(),
                report.overall() ? "PASS" : "FAIL");

    if (!report_path.empty()) {
        sqgsteady::write_report(report, report_path);
        ordered_json config{{"command", "verify"},
                            {"suite", suite},
                            {"m_list", m_list},
                            {"solution", solution_path},
                            {"seed", global.seed},
                            {"threads", resolved_threads(global.threads)},
                            {"simd", sqgsteady::simd::active().name}};
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_run_manifest(command, config, seconds, {report_path}, report_path);
        std::printf("wrote %s\n", report_path.c_str());
    }
    return report.overall() ? kExitOk : kExitVerificationFailure;
}

int run_export(const std::string& command, const GlobalOptions& global,
               const std::string& solution_path, const std::string& what, int grid_size,
               const std::string& out_path) {
    const sqgsteady::SolutionBundle bundle = sqgsteady::read_solution(solution_path);
    const auto t0 = std::chrono::steady_clock::now();
    if (what == "profile")
        sqgsteady::export_profile_csv(bundle, grid_size, out_path);
    else if (what == "theta")
        sqgsteady::export_theta_csv(bundle, grid_size, out_path);
    else
        throw sqgsteady::config_error("unknown export kind '" + what +
                                      "', expected profile or theta");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ordered_json config{{"command", "export"},   {"solution", solution_path},
                        {"what", what},          {"grid_size", grid_size},
                        {"seed", global.seed},   {"threads", resolved_threads(global.threads)},
                        {"simd", sqgsteady::simd::active().name}};
    write_run_manifest(command, config, seconds, {out_path}, out_path);
    std::printf("wrote %s\n", out_path.c_str());
    return kExitOk;
}

int run_evolve(const std::string& command, const GlobalOptions& global,
               const std::string& solution_path, double t_end, double dt,
               const std::string& out_path) {
    const sqgsteady::SolutionBundle bundle = sqgsteady::read_solution(solution_path);

    sqgsteady::EvolutionConfig cfg;
    cfg.family = bundle.family == Family::degregorio ? Family::degregorio : Family::sqg_unfolded;
    cfg.m = bundle.family == Family::degregorio ? bundle.m : 1;
    cfg.alpha = bundle.alpha;
    cfg.modes = bundle.coeffs_f.modes();
    cfg.grid = 3 * cfg.modes;
    cfg.dt = dt;
    cfg.t_end = t_end;
    cfg.validate();

    ordered_json config{{"command", "evolve"},
                        {"solution", solution_path},
                        {"family", sqgsteady::family_name(cfg.family)},
                        {"alpha", cfg.alpha},
                        {"modes", cfg.modes},
                        {"grid", cfg.grid},
                        {"dt", cfg.dt},
                        {"T", cfg.t_end},
                        {"seed", global.seed},
                        {"threads", resolved_threads(global.threads)},
                        {"simd", sqgsteady::simd::active().name}};

    const auto t0 = std::chrono::steady_clock::now();
    const sqgsteady::EvolutionResult result = sqgsteady::evolve(bundle.coeffs_f, cfg);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    sqgsteady::export_drift_csv(result.history, out_path);
    write_run_manifest(command, config, seconds, {out_path}, out_path);
    std::printf("steps=%zu final_drift=%.6e (%.2fs)\n", result.history.size(), result.drift,
                seconds);
    std::printf("wrote %s\n", out_path.c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stationary profile solver and verification suite"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "seed for randomized checks (recorded in manifests)");
    app.add_option("--threads", global.threads,
                   "worker thread budget, 0 = hardware (recorded in manifests)");

    std::string family = "sqg";
    int m = 3;
    double alpha = 2.0;
    int modes = 256;
    int grid = 1024;
    double tol = 1e-10;
    int max_iter = 500;
    double damping = 1.0;
    bool symmetry = false;
    double m_cap = 0.0;
    std::string solve_out = "solution.json";
    CLI::App* solve_cmd = app.add_subcommand("solve", "run the fixed-point solver");
    solve_cmd->add_option("--family", family, "sqg | degregorio")->capture_default_str();
    solve_cmd->add_option("--m", m, "fold of the profile")->capture_default_str();
    solve_cmd->add_option("--alpha", alpha, "nonlinearity exponent, > 1/2")
        ->capture_default_str();
    solve_cmd->add_option("--modes", modes, "sine modes kept")->capture_default_str();
    solve_cmd->add_option("--grid", grid, "collocation grid size")->capture_default_str();
    solve_cmd->add_option("--tol", tol, "sup-norm stopping tolerance")->capture_default_str();
    solve_cmd->add_option("--max-iter", max_iter, "iteration budget")->capture_default_str();
    solve_cmd->add_option("--damping", damping, "relaxation factor in (0, 1]")
        ->capture_default_str();
    solve_cmd->add_flag("--symmetry", symmetry, "project out even sine modes each step");
    solve_cmd->add_option("--m-cap", m_cap, "optional sup bound checked as a diagnostic")
        ->capture_default_str();
    solve_cmd->add_option("--out", solve_out, "solution bundle path")->capture_default_str();

    std::string suite = "all";
    std::vector<int> m_list{3};
    std::string verify_solution;
    std::string report_path;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite, "identity | kernel | lemmas | residual | all")
        ->capture_default_str();
    verify_cmd->add_option("--m-list", m_list, "folds to verify")->delimiter(',');
    verify_cmd->add_option("--solution", verify_solution,
                           "solution bundle; its residual checks join the suite");
    verify_cmd->add_option("--report", report_path, "write the report JSON here");

    std::string export_solution;
    std::string what = "profile";
    int export_grid = 512;
    std::string export_out = "export.csv";
    CLI::App* export_cmd = app.add_subcommand("export", "sample a solution to CSV");
    export_cmd->add_option("--solution", export_solution, "solution bundle path")->required();
    export_cmd->add_option("--what", what, "profile | theta")->capture_default_str();
    export_cmd->add_option("--grid-size", export_grid, "samples per axis")
        ->capture_default_str();
    export_cmd->add_option("--out", export_out, "CSV path")->capture_default_str();

    std::string evolve_solution;
    double t_end = 0.1;
    double dt = 1e-4;
    std::string evolve_out = "drift.csv";
    CLI::App* evolve_cmd = app.add_subcommand("evolve", "integrate the unfolded state");
    evolve_cmd->add_option("--solution", evolve_solution, "solution bundle path")->required();
    evolve_cmd->add_option("--T", t_end, "horizon")->capture_default_str();
    evolve_cmd->add_option("--dt", dt, "RK4 step")->capture_default_str();
    evolve_cmd->add_option("--out", evolve_out, "drift history CSV path")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitBadConfig;
    }

    const std::string command = joined_command(argc, argv);
    try {
        if (solve_cmd->parsed())
            return run_solve(command, global, family, m, alpha, modes, grid, tol, max_iter,
                             damping, symmetry, m_cap, solve_out);
        if (verify_cmd->parsed())
            return run_verify(command, global, suite, m_list, verify_solution, report_path);
        if (export_cmd->parsed())
            return run_export(command, global, export_solution, what, export_grid, export_out);
        if (evolve_cmd->parsed())
            return run_evolve(command, global, evolve_solution, t_end, dt, evolve_out);
    } catch (const sqgsteady::instability_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBlowUp;
    } catch (const sqgsteady::config_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadConfig;
    } catch (const sqgsteady::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadConfig;
    }
    return kExitBadConfig;
}
