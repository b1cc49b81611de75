// Acceptance gate: thirteen numbered criteria, one verdict line each.
// Tolerances are pinned here on purpose; a criterion that cannot be met by
// this discretization fails in the open rather than being loosened.
#include "sqgsteady/clausen.hpp"
#include "sqgsteady/dynamics.hpp"
#include "sqgsteady/kernel.hpp"
#include "sqgsteady/operators.hpp"
#include "sqgsteady/sine_series.hpp"
#include "sqgsteady/solver.hpp"
#include "sqgsteady/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace sqgsteady;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void verdict(int n, bool pass, const char* label, const std::string& detail) {
    if (!pass) ++failures;
    std::printf("%s criterion-%02d %-34s %s\n", pass ? "PASS" : "FAIL", n, label,
                detail.c_str());
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

GridFunction positive_profile(std::mt19937& rng, int modes, int n) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    SineSeries s(modes);
    s[1] = 2.0 + dist(rng);
    for (int k = 2; k <= modes; ++k) s[k] = dist(rng) / (k * k * k);
    return to_grid(s, n);
}

// 1. the linear branch reproduces the closed eigenpair
void criterion_1() {
    SolverConfig cfg;
    cfg.alpha = 1.0;
    cfg.modes = 64;
    cfg.grid = 256;
    const SolutionBundle b = solve(cfg);
    const double lambda_err = std::abs(b.lambda - 1.6);

    double off_mode = 0.0;
    for (int k = 1; k <= b.coeffs_f.modes(); ++k)
        if (k != 3) off_mode = std::max(off_mode, std::abs(b.coeffs_f[k]));
    const double rel_off = off_mode / std::abs(b.coeffs_f[3]);

    verdict(1, lambda_err <= 1e-12 && rel_off <= 1e-12, "linear-eigenpair",
            fmt("lambda_err=%.3e off_mode_rel=%.3e (tol 1e-12)", lambda_err, rel_off));
}

// 2. weighted-sine eigen identity over random profiles
void criterion_2() {
    std::mt19937 rng(12345);
    double worst = 0.0;
    for (int m = 3; m <= 6; ++m) {
        const MultiplierOperator op = MultiplierOperator::sqg_folded(m);
        for (int draw = 0; draw < 25; ++draw)
            worst = std::max(worst, eigen_identity_check(positive_profile(rng, 24, 256), op));
    }
    verdict(2, worst <= 1e-12, "eigen-identity-100-draws",
            fmt("max_rel_defect=%.3e (tol 1e-12)", worst));
}

// 3. flagship solve: convergence, fixed-point residual, stationary residual
//    with a non-solution control, wall clock
void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();

    SolverConfig cfg; // alpha 2, m 3, K 256, N 1024, tol 1e-10
    const SolutionBundle b = solve(cfg);
    const MultiplierOperator op = cfg.make_operator();

    const int n_res = 2 * cfg.grid;
    const double residual = stationary_residual(b.coeffs_g, b.alpha, op, n_res).weighted_sup;

    SineSeries control(2);
    control[2] = 1.0;
    const double control_residual =
        stationary_residual(control, b.alpha, op, n_res).weighted_sup;
    const double control_ratio = control_residual / residual;

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const bool conv = b.diagnostics.converged && b.diagnostics.iterations <= 500;
    const bool fp = b.diagnostics.fixed_point_residual <= 1e-8;
    const bool stat = residual <= 1e-6;
    const bool control_ok = control_ratio >= 1e4;
    const bool fast = seconds <= 30.0;

    verdict(3, conv && fp && stat && control_ok && fast, "flagship-solve",
            fmt("iters=%d fp=%.3e (tol 1e-8) residual=%.3e (tol 1e-6) "
                "control_ratio=%.3e (floor 1e4) wall=%.1fs (cap 30)",
                b.diagnostics.iterations, b.diagnostics.fixed_point_residual, residual,
                control_ratio, seconds));
}

// 4. multiplier route and kernel quadrature route agree
void criterion_4() {
    SolverConfig cfg;
    const SolutionBundle b = solve(cfg);
    const KernelConfig kcfg(3);

    const int n = 4096;
    const GridFunction v = to_grid(b.coeffs_v, n);
    const GridFunction w = pointwise_power(v, 1.0 / b.alpha);
    const double converged_defect = cross_path_check(w, kcfg);

    std::mt19937 rng(12345);
    double random_defect = 0.0;
    for (int draw = 0; draw < 20; ++draw)
        random_defect =
            std::max(random_defect, cross_path_check(positive_profile(rng, 32, 512), kcfg));

    verdict(4, converged_defect <= 1e-6 && random_defect <= 1e-6, "dual-route-agreement",
            fmt("converged=%.3e random20=%.3e (tol 1e-6)", converged_defect, random_defect));
}

// 5. kernel positivity on the lattice scan
void criterion_5() {
    double worst_min = 1e300;
    int worst_m = 0;
    for (int m = 3; m <= 8; ++m) {
        const KernelConfig cfg(m);
        const double mn = kernel_min_scan(cfg, 501);
        if (mn < worst_min) {
            worst_min = mn;
            worst_m = m;
        }
    }
    verdict(5, worst_min >= -1e-10, "kernel-positivity",
            fmt("lattice_min=%.3e at m=%d (floor -1e-10)", worst_min, worst_m));
}

// 6. concavity majorant chain and the tau constant
void criterion_6() {
    double worst_excess = -1e300, worst_gap = -1e300, worst_cubic = -1e300;
    for (int m = 3; m <= 8; ++m) {
        const ConcavityScan scan = concavity_chain_scan(m);
        worst_excess = std::max(worst_excess, scan.max_excess_over_quartic);
        worst_gap = std::max(worst_gap, scan.max_quartic_over_cubic);
        worst_cubic = std::max(worst_cubic, scan.max_cubic);
    }
    const double tau_err = std::abs(tau() - (2.0 - kPi * kPi / 6.0));
    const bool chain = worst_excess <= 1e-12 && worst_gap <= 1e-12 && worst_cubic < 0.0;
    const bool tau_ok = tau_err <= 1e-10 && tau() < 0.45;
    verdict(6, chain && tau_ok, "concavity-chain",
            fmt("excess=%.3e gap=%.3e cubic_max=%.3e tau_err=%.3e", worst_excess, worst_gap,
                worst_cubic, tau_err));
}

// 7. window building blocks: cl2 slope, psi limit, rho argmax
void criterion_7() {
    double fd_worst = 0.0;
    const double h = 1e-6;
    for (int i = 1; i <= 50; ++i) {
        const double x = 0.05 + (kPi - 0.1) * (i - 1) / 49.0;
        const double fd = (cl2(x + h) - cl2(x - h)) / (2 * h);
        const double exact = -0.5 * std::log(2.0 - 2.0 * std::cos(x));
        fd_worst = std::max(fd_worst, std::abs(fd - exact));
    }
    const double psi_err = std::abs(psi(1e-6) - 1.25 * std::log(4.0));
    const double argmax_err = std::abs(rho_delta_argmax(1e-2) - kPi / 2);
    verdict(7, fd_worst <= 1e-7 && psi_err <= 1e-3 && argmax_err <= 1e-6, "window-blocks",
            fmt("cl2_fd=%.3e (tol 1e-7) psi_err=%.3e (tol 1e-3) argmax_err=%.3e (tol 1e-6)",
                fd_worst, psi_err, argmax_err));
}

// 8. windowed-integral slope sits in the contraction band
void criterion_8() {
    const KernelConfig cfg(3);
    const double deltas[] = {1e-2, 1e-3, 1e-4, 1e-5};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double d : deltas) {
        const double x = std::log(d), y = std::log(i_delta(cfg, d));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = 4.0;
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    verdict(8, slope >= 0.88 && slope < 1.00, "window-slope",
            fmt("slope=%.6f (band [0.88, 1.00))", slope));
}

// 9. endpoint regularity exponents track 1/alpha
void criterion_9() {
    SolverConfig cfg;
    const double h2 = holder_exponent(solve(cfg));
    cfg.alpha = 3.0;
    const double h3 = holder_exponent(solve(cfg));
    const bool ok2 = std::abs(h2 - 0.5) <= 0.05;
    const bool ok3 = std::abs(h3 - 1.0 / 3.0) <= 0.05;
    verdict(9, ok2 && ok3, "holder-exponents",
            fmt("alpha2=%.4f (want 0.50+-0.05) alpha3=%.4f (want 0.33+-0.05)", h2, h3));
}

// 10. folding the multiplier commutes with the mode ladder
void criterion_10() {
    double worst = 0.0;
    for (int m = 3; m <= 8; ++m) {
        SineSeries f(32 * m);
        for (int j = 1; j <= 32; ++j) f[j * m] = 1.0 / (j * j);
        worst = std::max(worst, folding_residual(f, m, 512));
    }
    verdict(10, worst <= 1e-12, "folding-exactness", fmt("max_residual=%.3e (tol 1e-12)", worst));
}

// 11. transport-family branch solves cleanly with a positive profile
void criterion_11() {
    SolverConfig cfg;
    cfg.family = Family::degregorio;
    cfg.m = 1;
    const SolutionBundle b = solve(cfg);

    const GridFunction v = to_grid(b.coeffs_v, b.grid);
    double interior_min = 1e300;
    for (int j = 1; j < b.grid; ++j) interior_min = std::min(interior_min, v.values[j]);

    verdict(11, b.diagnostics.fixed_point_residual <= 1e-8 && interior_min > 0.0,
            "transport-branch",
            fmt("fp_residual=%.3e (tol 1e-8) interior_min=%.3e (floor 0)",
                b.diagnostics.fixed_point_residual, interior_min));
}

// 12. steady states under the time integrator
void criterion_12() {
    SolverConfig scfg; // alpha 2 flagship
    const SolutionBundle b2 = solve(scfg);
    EvolutionConfig ecfg;
    ecfg.modes = b2.coeffs_f.modes();
    ecfg.grid = 3 * ecfg.modes;
    ecfg.dt = 1e-4;
    ecfg.t_end = 0.1;
    const double drift2 = evolve(b2.coeffs_f, ecfg).drift;

    scfg.alpha = 1.0;
    scfg.modes = 64;
    scfg.grid = 256;
    const SolutionBundle b1 = solve(scfg);
    ecfg.alpha = 1.0;
    ecfg.modes = b1.coeffs_f.modes();
    ecfg.grid = 3 * ecfg.modes;
    const double drift1 = evolve(b1.coeffs_f, ecfg).drift;

    verdict(12, drift2 <= 1e-5 && drift1 <= 1e-10, "steady-drift",
            fmt("alpha2_drift=%.3e (tol 1e-5) alpha1_drift=%.3e (tol 1e-10)", drift2, drift1));
}

// 13. negativity criterion boundary behavior
void criterion_13() {
    const NegativityResult boundary = negativity_criterion(1.0, 0.25, 0.5);
    const bool boundary_ok =
        std::abs(boundary.beta_at_m0) <= 1e-12 && !boundary.is_negative;
    const NegativityResult inside = negativity_criterion(1.0, 0.20, 0.5);
    const NegativityResult outside = negativity_criterion(1.0, 0.30, 0.5);
    const bool scan_ok = inside.is_negative && !outside.is_negative;
    verdict(13, boundary_ok && scan_ok, "negativity-boundary",
            fmt("beta_at_m0=%.3e (tol 1e-12) boundary_flag=%s inside=%s outside=%s",
                boundary.beta_at_m0, boundary.is_negative ? "neg" : "nonneg",
                inside.is_negative ? "neg" : "nonneg", outside.is_negative ? "neg" : "nonneg"));
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();

    std::printf("%d of 13 criteria passed\n", 13 - failures);
    return failures == 0 ? 0 : 1;
}
