#include "sqgsteady/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace sqgsteady {

namespace {

constexpr double kPi = std::numbers::pi;

void zero_even_modes(SineSeries& s) {
    for (int k = 2; k <= s.modes(); k += 2) s[k] = 0.0;
}

SineSeries ground_mode_series(int modes, double amplitude) {
    SineSeries s(modes);
    s[1] = amplitude;
    return s;
}

} // namespace

MultiplierOperator SolverConfig::make_operator() const {
    switch (family) {
        case Family::sqg_folded: return MultiplierOperator::sqg_folded(m);
        case Family::degregorio: return MultiplierOperator::degregorio(m);
        default:
            throw config_error(std::string("solver supports sqg_folded and degregorio, not ") +
                               family_name(family));
    }
}

void SolverConfig::validate() const {
    if (alpha <= 0.5)
        throw config_error("alpha must exceed 1/2, got " + std::to_string(alpha));
    if (modes < 1) throw config_error("mode count must be positive");
    if (grid < modes + 1)
        throw resolution_error("grid " + std::to_string(grid) + " cannot resolve " +
                               std::to_string(modes) + " modes");
    if (tol <= 0.0) throw config_error("tolerance must be positive");
    if (max_iter < 1) throw config_error("max_iter must be positive");
    if (damping <= 0.0 || damping > 1.0)
        throw config_error("damping must lie in (0, 1], got " + std::to_string(damping));
    if (m_cap < 0.0) throw config_error("sup cap must be nonnegative");
    make_operator(); // family/m consistency
}

nonconvergence_error::nonconvergence_error(const std::string& msg, SolutionBundle last)
    : error(msg), last_bundle(std::move(last)) {}

GridFunction operator_A(const GridFunction& v, const MultiplierOperator& op, double alpha,
                        int modes, bool symmetry, double* clamped_mass) {
    const GridFunction powered = pointwise_power(v, 1.0 / alpha, clamped_mass);
    SineSeries coeffs = to_coefficients(powered, modes);
    for (int k = 1; k <= modes; ++k) coeffs[k] = -op.symbol(k) * coeffs[k];
    if (symmetry) zero_even_modes(coeffs);
    return to_grid(coeffs, v.grid_size);
}

namespace {

SolutionBundle finalize(const SolverConfig& cfg, const MultiplierOperator& op,
                        const GridFunction& v, double lambda, SolverDiagnostics diag) {
    SolutionBundle b;
    b.family = cfg.family;
    b.m = cfg.m;
    b.alpha = cfg.alpha;
    b.modes = cfg.modes;
    b.grid = cfg.grid;
    b.lambda = lambda;
    b.coeffs_v = to_coefficients(v, cfg.modes);
    // Analysis of the symmetric iterate leaves rounding dust on the even
    // modes; the flag promises hard zeros.
    if (cfg.symmetry)
        for (int k = 2; k <= cfg.modes; k += 2) b.coeffs_v[k] = 0.0;
    b.gamma = std::pow(lambda, cfg.alpha / (cfg.alpha - 1.0));
    if (!std::isfinite(b.gamma))
        throw numerical_error("scale factor gamma is not finite for lambda = " +
                              std::to_string(lambda));

    // Grid-primary g: synthesize u = gamma v, take -(u_+)^(1/alpha), project.
    GridFunction u = v;
    for (double& x : u.values) x *= b.gamma;
    GridFunction g = pointwise_power(u, 1.0 / cfg.alpha);
    for (double& x : g.values) x = -x;
    b.coeffs_g = to_coefficients(g, cfg.modes);
    // Symmetry of v about pi/2 survives the pointwise power, so the same
    // projection applies to g.
    if (cfg.symmetry)
        for (int k = 2; k <= cfg.modes; k += 2) b.coeffs_g[k] = 0.0;

    // Unfold onto the m-periodic mode ladder.
    b.coeffs_f = SineSeries(cfg.modes * cfg.m);
    for (int j = 1; j <= cfg.modes; ++j) b.coeffs_f[j * cfg.m] = b.coeffs_g[j];

    // Fixed-point residual of u against one exact map application.
    const GridFunction au = operator_A(u, op, cfg.alpha, cfg.modes, cfg.symmetry);
    double num = 0.0;
    for (std::size_t j = 0; j < u.values.size(); ++j)
        num = std::max(num, std::abs(u.values[j] - au.values[j]));
    const double den = u.sup_norm();
    diag.fixed_point_residual = den > 0.0 ? num / den : 0.0;

    diag.sup_v = v.sup_norm();
    const SineSeries v_series = to_coefficients(v, 1);
    diag.normalization_defect = std::abs(0.5 * kPi * v_series[1] - 1.0);

    // Weighted-mass lower bound on the final iterate.
    const double mass = weighted_sine_integral(pointwise_power(v, 1.0 / cfg.alpha));
    const double cap = cfg.m_cap > 0.0 ? cfg.m_cap : diag.sup_v;
    if (cfg.alpha > 1.0)
        diag.weighted_mass_bound_ok = mass >= std::pow(cap, 1.0 / cfg.alpha - 1.0) - 1e-12;
    else
        diag.weighted_mass_bound_ok = mass >= std::pow(2.0, 1.0 - 1.0 / cfg.alpha) - 1e-12;
    diag.sup_cap_ok = cfg.m_cap <= 0.0 || diag.sup_v <= cfg.m_cap + 1e-12;

    b.diagnostics = std::move(diag);
    return b;
}

SolutionBundle solve_linear_branch(const SolverConfig& cfg, const MultiplierOperator& op) {
    // alpha = 1: the map is linear and (2/pi) sin x is an exact eigenvector
    // with eigenvalue rho; gamma degenerates to 1 and g comes from the
    // spectral inverse.
    SolutionBundle b;
    b.family = cfg.family;
    b.m = cfg.m;
    b.alpha = 1.0;
    b.modes = cfg.modes;
    b.grid = cfg.grid;
    b.lambda = op.rho();
    b.gamma = 1.0;
    b.coeffs_v = ground_mode_series(cfg.modes, 2.0 / kPi);
    b.coeffs_g = apply_inverse(op, b.coeffs_v);
    b.coeffs_f = SineSeries(cfg.modes * cfg.m);
    for (int j = 1; j <= cfg.modes; ++j) b.coeffs_f[j * cfg.m] = b.coeffs_g[j];

    b.diagnostics.iterations = 0;
    b.diagnostics.converged = true;
    b.diagnostics.update_norm = 0.0;
    b.diagnostics.fixed_point_residual = 0.0;
    b.diagnostics.sup_v = to_grid(b.coeffs_v, cfg.grid).sup_norm();
    b.diagnostics.normalization_defect = 0.0;
    return b;
}

} // namespace

SolutionBundle solve(const SolverConfig& cfg) {
    cfg.validate();
    const MultiplierOperator op = cfg.make_operator();
    if (cfg.alpha == 1.0) return solve_linear_branch(cfg, op);

    GridFunction v = to_grid(ground_mode_series(cfg.modes, 2.0 / kPi), cfg.grid);

    SolverDiagnostics diag;
    diag.update_history.reserve(static_cast<std::size_t>(cfg.max_iter));

    double omega = cfg.damping;
    double lambda = 0.0;
    int consecutive_increases = 0;
    bool converged = false;

    for (int it = 1; it <= cfg.max_iter; ++it) {
        double clamped = 0.0;
        const GridFunction av = operator_A(v, op, cfg.alpha, cfg.modes, cfg.symmetry, &clamped);
        lambda = weighted_sine_integral(av);
        if (!std::isfinite(lambda))
            throw numerical_error("weighted integral of the iterate is not finite");
        if (std::abs(lambda) < 1e-300)
            throw degenerate_input_error("iterate lost its weighted mass; cannot normalize");

        double update = 0.0;
        for (std::size_t j = 0; j < v.values.size(); ++j) {
            const double next = av.values[j] / lambda;
            update = std::max(update, std::abs(next - v.values[j]));
            v.values[j] += omega * (next - v.values[j]);
        }

        diag.iterations = it;
        diag.clamped_mass = clamped;
        if (!diag.update_history.empty() && update > diag.update_history.back())
            ++consecutive_increases;
        else
            consecutive_increases = 0;
        diag.update_history.push_back(update);
        diag.update_norm = update;

        if (update < cfg.tol) {
            converged = true;
            break;
        }
        // Two successive growths of the update norm: halve the relaxation.
        if (consecutive_increases >= 2 && omega > 0.5 * cfg.damping) {
            omega = 0.5 * cfg.damping;
            consecutive_increases = 0;
        }
    }

    diag.converged = converged;
    SolutionBundle bundle = finalize(cfg, op, v, lambda, std::move(diag));
    if (!converged) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "fixed-point iteration did not reach tol %.3g within %d iterations",
                      cfg.tol, cfg.max_iter);
        throw nonconvergence_error(buf, std::move(bundle));
    }
    return bundle;
}

GridFunction bundle_g_grid(const SolutionBundle& bundle) {
    if (bundle.alpha == 1.0) return to_grid(bundle.coeffs_g, bundle.grid);
    GridFunction u = to_grid(bundle.coeffs_v, bundle.grid);
    for (double& x : u.values) x *= bundle.gamma;
    GridFunction g = pointwise_power(u, 1.0 / bundle.alpha);
    for (double& x : g.values) x = -x;
    return g;
}

double holder_exponent(const SolutionBundle& bundle, double lo, double hi) {
    if (!(lo > 0.0 && lo < hi && hi <= 0.25 * kPi))
        throw config_error("holder window must satisfy 0 < lo < hi <= pi/4");
    const GridFunction g = bundle_g_grid(bundle);
    std::vector<double> lx, ly;
    for (int j = 1; j < g.grid_size; ++j) {
        const double x = g.node(j);
        if (x <= lo || x >= hi) continue;
        const double val = std::abs(g.values[static_cast<std::size_t>(j)]);
        if (val == 0.0) throw fit_error("profile vanishes inside the fit window");
        lx.push_back(std::log(x));
        ly.push_back(std::log(val));
    }
    if (lx.size() < 8)
        throw fit_error("fit window contains only " + std::to_string(lx.size()) +
                        " grid nodes; need at least 8");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(lx.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) throw fit_error("degenerate abscissae in the fit window");
    return sxy / sxx;
}

} // namespace sqgsteady
