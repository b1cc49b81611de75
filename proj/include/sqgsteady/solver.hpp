#pragma once

#include "sqgsteady/errors.hpp"
#include "sqgsteady/operators.hpp"
#include "sqgsteady/sine_series.hpp"

#include <string>
#include <vector>

namespace sqgsteady {

struct SolverConfig {
    Family family = Family::sqg_folded;
    int m = 3;
    double alpha = 2.0;
    int modes = 256;
    int grid = 1024;
    double tol = 1e-10;
    int max_iter = 500;
    double damping = 1.0;
    bool symmetry = false; // project out even sine modes each iteration
    double m_cap = 0.0;    // optional diagnostic sup bound; 0 = unset

    MultiplierOperator make_operator() const;
    void validate() const;
};

struct SolverDiagnostics {
    int iterations = 0;
    double update_norm = 0.0;
    double fixed_point_residual = 0.0; // sup|u - A u| / sup|u|
    double clamped_mass = 0.0;
    double sup_v = 0.0;
    bool converged = false;
    bool weighted_mass_bound_ok = true; // lower bound on int v^(1/alpha) sin
    bool sup_cap_ok = true;             // sup v <= m_cap when a cap is set
    double normalization_defect = 0.0;  // |(pi/2) a_1(v) - 1| at the last iterate
    std::vector<double> update_history;
};

// Profile triple produced by one solve:
//   v: normalized iterate, (pi/2) a_1(v) = 1
//   u = gamma v satisfies u = -S_m (u_+)^(1/alpha) at the discrete level
//   g = -(u)^(1/alpha) (grid formula; spectral inverse agrees at the
//       fixed point), and f unfolds g onto modes {m, 2m, ...}.
struct SolutionBundle {
    Family family = Family::sqg_folded;
    int m = 3;
    double alpha = 2.0;
    int modes = 0;
    int grid = 0;
    SineSeries coeffs_v;
    double lambda = 0.0;
    double gamma = 0.0;
    SineSeries coeffs_g;
    SineSeries coeffs_f;
    SolverDiagnostics diagnostics;
};

// Iteration ran out of max_iter; carries the last iterate so callers can
// still persist it (CLI exit code 2).
struct nonconvergence_error : error {
    nonconvergence_error(const std::string& msg, SolutionBundle last);
    SolutionBundle last_bundle;
};

// One application of v -> -S (clamp(v))^(1/alpha) projected to `modes`
// modes and resampled on v's grid. Scale covariance: A(c v) = c^(1/alpha) A(v).
GridFunction operator_A(const GridFunction& v, const MultiplierOperator& op, double alpha,
                        int modes, bool symmetry = false, double* clamped_mass = nullptr);

// Damped normalized fixed-point iteration on v, started from (2/pi) sin x.
// alpha = 1 short-circuits to the closed eigenfunction branch.
SolutionBundle solve(const SolverConfig& cfg);

// Log-log slope of |g| over grid nodes in (lo, hi), g taken from the
// bundle's grid-primary formula. Requires 0 < lo < hi <= pi/4.
double holder_exponent(const SolutionBundle& bundle, double lo = 1e-3, double hi = 1e-1);

// Rebuild the grid realization of g = -(gamma v)^(1/alpha) from the bundle.
GridFunction bundle_g_grid(const SolutionBundle& bundle);

} // namespace sqgsteady
