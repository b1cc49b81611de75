#pragma once

#include "sqgsteady/operators.hpp"
#include "sqgsteady/sine_series.hpp"

#include <vector>

namespace sqgsteady {

// Parameters of the convolution representation of the transport velocity.
// The generating profile is
//   phi(u) = log(1 - cos u) - 6 * c(u),   c(u) = sum_k cos(ku)/(m^2 k^3 - 4k)
// for the sqg_folded family, and the bare log for degregorio. truncation
// bounds the residual series length; the raw-series tail estimate
// 3 / (pi m^2 T^2) must not exceed tail_tol.
struct KernelConfig {
    int m;
    Family family;
    int truncation;
    double tail_tol;

    explicit KernelConfig(int m_, Family family_ = Family::sqg_folded, int truncation_ = 512,
                          double tail_tol_ = 1e-6);
};

// Correction series c(u) via the accelerated split
// cl3(u)/m^2 + 4 cl5(u)/m^4 + (16/m^4) sum cos(ku)/(k^5 (m^2 k^2 - 4)).
double kernel_correction_series(const KernelConfig& cfg, double u);

// phi and derivatives; singularity_error at u = 0 mod 2 pi.
double kernel_profile(const KernelConfig& cfg, double u);
double kernel_profile_prime(const KernelConfig& cfg, double u);
double kernel_profile_second(const KernelConfig& cfg, double u);

// K(x, y) = (phi(x + y) - phi(x - y)) / (2 pi); singular on x = y and on
// x + y = 0 mod 2 pi.
double kernel_value(const KernelConfig& cfg, double x, double y);

// Discrete convolution operator on the closed N-grid realizing
//   (A w)(x_i) = -(1/2pi) Int_0^{2pi} phi(x_i - y) W(y) dy,
// W the odd periodic extension of w. The logarithmic part of phi is
// integrated by product integration: each grid cell carries exact moments
// of the log singularity against a cubic interpolant of W, so the scheme
// stays O(h^4) through the diagonal. The smooth remainder rides on the
// (spectrally accurate) periodic trapezoid rule.
class KernelQuadrature {
public:
    KernelQuadrature(const KernelConfig& cfg, int n);

    int grid_size() const { return n_; }

    // Convolution node weight kappa_d, d = 0..2N-1 (even in d).
    double node_weight(int d) const;

    GridFunction apply(const GridFunction& w) const;

private:
    int n_;
    std::vector<double> kappa_ext_; // kappa[t mod 2N] for t = 0..4N-1
};

// One-shot convenience around KernelQuadrature.
GridFunction apply_kernel(const GridFunction& w, const KernelConfig& cfg);

// Integral of K(x, .) over the window (x - delta/2, x + delta/2) clipped
// to [0, pi]; log part via the exact Clausen antiderivative, correction
// series part via composite trapezoid quadrature.
double windowed_kernel_integral(const KernelConfig& cfg, double x, double delta);

// max over x_i = i pi / scan_points of windowed_kernel_integral.
double i_delta(const KernelConfig& cfg, double delta, int scan_points = 2048);

// rho(x; delta) = cl2(2x - delta) - cl2(2x + delta); its maximizer on
// [0, pi] sits at pi/2.
double rho_delta(double x, double delta);
double rho_delta_argmax(double delta);

// psi(delta) = (1/4) log(cot(delta/4) / (4 sin^2(delta/4))) + (3/4) log(4 delta),
// increasing to (5/4) log 4 as delta -> 0. Domain (0, 2 pi).
double psi(double delta);

// tau = sum_{k >= 2} 1/(k^2 (k-1)) = 2 - zeta(2), by direct downward
// summation; the tail beyond `terms` is below 1/(2 terms^2).
double tau(long long terms = 2000000);

// Convexity threshold for beta(M) = a1 M^{1/alpha} - M + a2 on alpha in
// (0,1): m0 minimizes beta, and min beta < 0 iff the strict product
// inequality a1^alpha a2^(1-alpha) < (1-alpha)^(1-alpha) alpha^alpha holds.
struct NegativityResult {
    double m0;
    double beta_at_m0;
    bool is_negative;
};
NegativityResult negativity_criterion(double a1, double a2, double alpha);

// max over an interior lattice of K(x,y) / (sin(y) (cot(|x-y|/2) + 1)).
double kernel_bound_ratio_scan(const KernelConfig& cfg, int lattice = 301);

// min of K(x,y) over the interior lattice, diagonal excluded.
double kernel_min_scan(const KernelConfig& cfg, int lattice = 501);

// Pointwise bounds dominating theta^2 phi''(x) at theta = sin(x/2):
// quartic majorant >= theta^2 phi'' and cubic majorant >= quartic, with
// the cubic strictly negative on (0, 1].
double concavity_quartic(int m, double theta);
double concavity_cubic(int m, double theta);

struct ConcavityScan {
    double max_excess_over_quartic; // max theta^2 phi'' - quartic
    double max_quartic_over_cubic;  // max quartic - cubic
    double max_cubic;               // max cubic (must be < 0)
};
ConcavityScan concavity_chain_scan(int m, int points = 2000);

} // namespace sqgsteady
