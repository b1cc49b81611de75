#include "sqgsteady/kernel.hpp"
#include "sqgsteady/clausen.hpp"
#include "sqgsteady/errors.hpp"
#include "sqgsteady/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sqgsteady {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLog2 = std::numbers::ln2;
constexpr double kTauValue = 2.0 - kPi * kPi / 6.0;

// Cubic Lagrange basis on local nodes {-1, 0, 1, 2}, tabulated as
// coefficient rows in powers of the cell coordinate s in [0, 1].
constexpr double kLagrange[4][4] = {
    {0.0, -1.0 / 3.0, 0.5, -1.0 / 6.0}, // node -1
    {1.0, -0.5, -1.0, 0.5},             // node  0
    {0.0, 1.0, 0.5, -0.5},              // node +1
    {0.0, -1.0 / 6.0, 0.0, 1.0 / 6.0},  // node +2
};

// int_0^1 s^p log(1 + s) ds for p = 0..3.
constexpr double kLogOnePlusMoment[4] = {
    2.0 * kLog2 - 1.0,
    0.25,
    2.0 * kLog2 / 3.0 - 5.0 / 18.0,
    7.0 / 48.0,
};

// 24-point Gauss-Legendre rule on [0, 1].
constexpr int kGlPoints = 24;
constexpr double kGlNode[kGlPoints] = {
    0.0024063900014893447, 0.012635722014345263, 0.030862723998633601,
    0.05679223649779952,   0.089999007013048526, 0.12993790421072282,
    0.17595317403151223,   0.22728926430558022,  0.28310324618697746,
    0.3424786601519183,    0.40444056626319186,  0.46797155356869719,
    0.53202844643130276,   0.5955594337368082,   0.6575213398480817,
    0.71689675381302254,   0.77271073569441984,  0.82404682596848777,
    0.87006209578927718,   0.91000099298695147,  0.94320776350220048,
    0.96913727600136634,   0.98736427798565474,  0.99759360999851066,
};
constexpr double kGlWeight[kGlPoints] = {
    0.0061706148999935454, 0.014265694314466872, 0.022138719408709776,
    0.029649292457718371,  0.036673240705540205, 0.043095080765976644,
    0.048809326052057032,  0.053722135057982803, 0.057752834026862807,
    0.06083523646390171,   0.062918728173414151, 0.063969097673376107,
    0.063969097673376107,  0.062918728173414151, 0.06083523646390171,
    0.057752834026862807,  0.053722135057982803, 0.048809326052057032,
    0.043095080765976644,  0.036673240705540205, 0.029649292457718371,
    0.022138719408709776,  0.014265694314466872, 0.0061706148999935454,
};

double fold_period(double u) {
    u = std::fmod(u, kTwoPi);
    if (u < 0.0) u += kTwoPi;
    return u;
}

// log(2 - 2 cos u), stable near both period ends.
double log_two_minus_two_cos(double u) {
    const double s = std::abs(std::sin(0.5 * u));
    if (s == 0.0) throw singularity_error("log(2 - 2 cos u) evaluated at u = 0 mod 2 pi");
    return 2.0 * std::log(2.0 * s);
}

// psi0(u) = 2 log(sin(u/2) / (u/2)); analytic on (-2 pi, 2 pi), psi0(0) = 0.
double psi0(double u) {
    const double t = 0.5 * u;
    double r;
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        r = -t2 / 6.0 * (1.0 - t2 / 20.0);
    } else {
        r = std::sin(t) / t - 1.0;
    }
    return 2.0 * std::log1p(r);
}

// sum_{k=1}^{T} trig(k u) / (k^power (m^2 k^2 - 4)); trig = cos or sin.
double residual_series(double u, int m, int power, bool sine, int t_len) {
    const double s1 = std::sin(u), c1 = std::cos(u);
    double sk = s1, ck = c1;
    const double m2 = static_cast<double>(m) * m;
    double acc = 0.0;
    for (int k = 1; k <= t_len; ++k) {
        const double kk = static_cast<double>(k);
        double kp = kk * kk * kk; // power >= 3 always
        if (power >= 4) kp *= kk;
        if (power >= 5) kp *= kk;
        acc += (sine ? sk : ck) / (kp * (m2 * kk * kk - 4.0));
        const double s_next = sk * c1 + ck * s1;
        ck = ck * c1 - sk * s1;
        sk = s_next;
    }
    return acc;
}

double basis_eval(int ri, double s) {
    const double* c = kLagrange[ri];
    return ((c[3] * s + c[2]) * s + c[1]) * s + c[0];
}

// M(l, p) = int_0^1 s^p log((l + s) h) ds, exact.
double log_cell_moment(int l, int p, double h) {
    const double pp1 = static_cast<double>(p) + 1.0;
    if (l == 0) return std::log(h) / pp1 - 1.0 / (pp1 * pp1);
    if (l == 1) return std::log(h) / pp1 + kLogOnePlusMoment[p];
    // log(1 + s/l) expanded; ratio <= 1/2 so ~60 terms bound the tail.
    double series = 0.0;
    double inv_l_pow = 1.0 / l;
    double sign = 1.0;
    for (int j = 1; j <= 80; ++j) {
        const double term = sign * inv_l_pow / (j * (pp1 + j));
        series += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(series))) break;
        inv_l_pow /= l;
        sign = -sign;
    }
    return std::log(l * h) / pp1 + series;
}

void require_kernel_family(Family f) {
    if (f != Family::sqg_folded && f != Family::degregorio)
        throw config_error(std::string("kernel representation exists for sqg_folded and "
                                       "degregorio families, not ") +
                           family_name(f));
}

} // namespace

KernelConfig::KernelConfig(int m_, Family family_, int truncation_, double tail_tol_)
    : m(m_), family(family_), truncation(truncation_), tail_tol(tail_tol_) {
    require_kernel_family(family);
    if (family == Family::sqg_folded && m < 3)
        throw config_error("sqg_folded kernel requires m >= 3, got " + std::to_string(m));
    if (m < 1) throw config_error("kernel fold must be positive");
    if (truncation < 8) throw config_error("kernel series truncation too small");
    if (tail_tol <= 0.0) throw config_error("kernel tail tolerance must be positive");
    if (family == Family::sqg_folded) {
        const double tail = 3.0 / (kPi * static_cast<double>(m) * m * static_cast<double>(truncation) * truncation);
        if (tail > tail_tol)
            throw config_error("kernel series truncation " + std::to_string(truncation) +
                               " leaves tail bound " + std::to_string(tail) +
                               " above tol " + std::to_string(tail_tol));
    }
}

double kernel_correction_series(const KernelConfig& cfg, double u) {
    if (cfg.family == Family::degregorio) return 0.0;
    const double m2 = static_cast<double>(cfg.m) * cfg.m;
    const double m4 = m2 * m2;
    return cl3(u) / m2 + 4.0 * cl5(u) / m4 +
           16.0 / m4 * residual_series(u, cfg.m, 5, /*sine=*/false, cfg.truncation);
}

double kernel_profile(const KernelConfig& cfg, double u) {
    u = fold_period(u);
    const double log_part = log_two_minus_two_cos(u) - kLog2; // log(1 - cos u)
    if (cfg.family == Family::degregorio) return log_part;
    return log_part - 6.0 * kernel_correction_series(cfg, u);
}

double kernel_profile_prime(const KernelConfig& cfg, double u) {
    u = fold_period(u);
    const double s = std::sin(0.5 * u);
    if (s == 0.0) throw singularity_error("kernel profile derivative at u = 0 mod 2 pi");
    const double cot_half = std::cos(0.5 * u) / s;
    if (cfg.family == Family::degregorio) return cot_half;
    const double m2 = static_cast<double>(cfg.m) * cfg.m;
    const double m4 = m2 * m2;
    return cot_half + 6.0 / m2 * cl2(u) + 24.0 / m4 * cl4(u) +
           96.0 / m4 * residual_series(u, cfg.m, 4, /*sine=*/true, cfg.truncation);
}

double kernel_profile_second(const KernelConfig& cfg, double u) {
    u = fold_period(u);
    const double s = std::sin(0.5 * u);
    if (s == 0.0) throw singularity_error("kernel profile curvature at u = 0 mod 2 pi");
    const double base = -0.5 / (s * s);
    if (cfg.family == Family::degregorio) return base;
    const double m2 = static_cast<double>(cfg.m) * cfg.m;
    const double m4 = m2 * m2;
    return base - 3.0 / m2 * log_two_minus_two_cos(u) + 24.0 / m4 * cl3(u) +
           96.0 / m4 * residual_series(u, cfg.m, 3, /*sine=*/false, cfg.truncation);
}

double kernel_value(const KernelConfig& cfg, double x, double y) {
    return (kernel_profile(cfg, x + y) - kernel_profile(cfg, x - y)) / kTwoPi;
}

KernelQuadrature::KernelQuadrature(const KernelConfig& cfg, int n) : n_(n) {
    if (n < 8) throw config_error("kernel quadrature needs at least 8 grid cells");
    const int two_n = 2 * n;
    const double h = kPi / n;

    // Cell integrals a[l][ri] = int_0^1 lambda((l+s)h) B_ri(s) ds for the
    // lower half circle; the upper half is the s -> 1-s reflection.
    std::vector<double> a(static_cast<std::size_t>(two_n) * 4);
    for (int l = 0; l < n; ++l) {
        double psi_part[4] = {0.0, 0.0, 0.0, 0.0};
        for (int q = 0; q < kGlPoints; ++q) {
            const double val = kGlWeight[q] * psi0((l + kGlNode[q]) * h);
            for (int ri = 0; ri < 4; ++ri) psi_part[ri] += val * basis_eval(ri, kGlNode[q]);
        }
        double moments[4];
        for (int p = 0; p < 4; ++p) moments[p] = log_cell_moment(l, p, h);
        for (int ri = 0; ri < 4; ++ri) {
            double log_part = 0.0;
            for (int p = 0; p < 4; ++p) log_part += kLagrange[ri][p] * moments[p];
            a[static_cast<std::size_t>(l) * 4 + ri] = 2.0 * log_part + psi_part[ri];
        }
    }
    for (int l = n; l < two_n; ++l) {
        const int lm = two_n - 1 - l;
        for (int ri = 0; ri < 4; ++ri)
            a[static_cast<std::size_t>(l) * 4 + ri] = a[static_cast<std::size_t>(lm) * 4 + (3 - ri)];
    }

    // Node weights: cell l, basis ri touches node l + ri - 1.
    std::vector<double> omega(static_cast<std::size_t>(two_n), 0.0);
    for (int d = 0; d < two_n; ++d) {
        double acc = 0.0;
        for (int ri = 0; ri < 4; ++ri) {
            const int l = ((d - ri + 1) % two_n + two_n) % two_n;
            acc += a[static_cast<std::size_t>(l) * 4 + ri];
        }
        omega[static_cast<std::size_t>(d)] = acc;
    }

    // kappa_d = -(h/2pi) omega_d + (3h/pi) c(u_d); the smooth correction
    // rides on the periodic trapezoid rule.
    std::vector<double> kappa(static_cast<std::size_t>(two_n));
    for (int d = 0; d < two_n; ++d) {
        double v = -h / kTwoPi * omega[static_cast<std::size_t>(d)];
        if (cfg.family == Family::sqg_folded)
            v += 3.0 * h / kPi * kernel_correction_series(cfg, d * h);
        kappa[static_cast<std::size_t>(d)] = v;
    }

    kappa_ext_.resize(static_cast<std::size_t>(4) * n);
    for (int t = 0; t < 4 * n; ++t)
        kappa_ext_[static_cast<std::size_t>(t)] = kappa[static_cast<std::size_t>(t % two_n)];
}

double KernelQuadrature::node_weight(int d) const {
    return kappa_ext_[static_cast<std::size_t>(((d % (2 * n_)) + 2 * n_) % (2 * n_))];
}

GridFunction KernelQuadrature::apply(const GridFunction& w) const {
    if (w.grid_size != n_)
        throw config_error("kernel quadrature built for N = " + std::to_string(n_) +
                           ", got grid " + std::to_string(w.grid_size));
    const int n = n_;
    const std::size_t len = static_cast<std::size_t>(n - 1);

    // Odd extension W folds the full-circle convolution into two
    // unit-stride inner products against shifted kappa windows:
    //   A_i = sum_j w_j kappa[i-j] - sum_j w_j kappa[i+j].
    std::vector<double> w_rev(len);
    for (int u = 1; u < n; ++u)
        w_rev[static_cast<std::size_t>(u - 1)] = w.values[static_cast<std::size_t>(n - u)];

    const auto& ops = simd::active();
    GridFunction out(n);
    const double* w_fwd = w.values.data() + 1;
    for (int i = 0; i <= n; ++i) {
        const double mirror = ops.dot(w_rev.data(), kappa_ext_.data() + i + n + 1, len);
        const double direct = ops.dot(w_fwd, kappa_ext_.data() + i + 1, len);
        out.values[static_cast<std::size_t>(i)] = mirror - direct;
    }
    return out;
}

GridFunction apply_kernel(const GridFunction& w, const KernelConfig& cfg) {
    return KernelQuadrature(cfg, w.grid_size).apply(w);
}

double windowed_kernel_integral(const KernelConfig& cfg, double x, double delta) {
    if (delta <= 0.0) throw config_error("window width must be positive");
    const double y1 = std::max(0.0, x - 0.5 * delta);
    const double y2 = std::min(kPi, x + 0.5 * delta);
    if (y2 <= y1) return 0.0;

    // Log part exactly: d/dy [-2 cl2(x+y) - 2 cl2(x-y)] = lambda(x+y) - lambda(x-y).
    const double g2 = -2.0 * (cl2(x + y2) + cl2(x - y2));
    const double g1 = -2.0 * (cl2(x + y1) + cl2(x - y1));
    double result = (g2 - g1) / kTwoPi;

    if (cfg.family == Family::sqg_folded) {
        // Correction series part by composite trapezoid; the integrand is
        // C^1 so the panel error is negligible at these window sizes.
        const int panels = 128;
        const double hq = (y2 - y1) / panels;
        double acc = 0.0;
        for (int q = 0; q <= panels; ++q) {
            const double y = y1 + q * hq;
            const double f = kernel_correction_series(cfg, x + y) -
                             kernel_correction_series(cfg, x - y);
            acc += (q == 0 || q == panels) ? 0.5 * f : f;
        }
        result += -3.0 / kPi * acc * hq;
    }
    return result;
}

double i_delta(const KernelConfig& cfg, double delta, int scan_points) {
    if (scan_points < 16) throw config_error("i_delta scan needs at least 16 points");
    double best = 0.0;
    for (int i = 0; i <= scan_points; ++i) {
        const double x = i * kPi / scan_points;
        best = std::max(best, windowed_kernel_integral(cfg, x, delta));
    }
    return best;
}

double rho_delta(double x, double delta) { return cl2(2.0 * x - delta) - cl2(2.0 * x + delta); }

double rho_delta_argmax(double delta) {
    if (delta <= 0.0) throw config_error("rho_delta window must be positive");
    const int scan = 4096;
    int best_i = 0;
    double best = -1e300;
    for (int i = 0; i <= scan; ++i) {
        const double v = rho_delta(i * kPi / scan, delta);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    // Golden-section refinement inside the bracketing pair of scan cells.
    double lo = std::max(0.0, (best_i - 1) * kPi / scan);
    double hi = std::min(kPi, (best_i + 1) * kPi / scan);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = rho_delta(c, delta), fd = rho_delta(d, delta);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = rho_delta(c, delta);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = rho_delta(d, delta);
        }
    }
    return 0.5 * (lo + hi);
}

double psi(double delta) {
    if (delta <= 0.0 || delta >= kTwoPi)
        throw config_error("psi is defined on (0, 2 pi)");
    const double q = 0.25 * delta;
    const double s = std::sin(q);
    const double cot = std::cos(q) / s;
    return 0.25 * std::log(cot / (4.0 * s * s)) + 0.75 * std::log(4.0 * delta);
}

double tau(long long terms) {
    if (terms < 2) throw config_error("tau needs at least the k = 2 term");
    double acc = 0.0;
    for (long long k = terms; k >= 2; --k) {
        const double kd = static_cast<double>(k);
        acc += 1.0 / (kd * kd * (kd - 1.0));
    }
    return acc;
}

NegativityResult negativity_criterion(double a1, double a2, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw config_error("negativity criterion requires alpha in (0, 1)");
    if (!(a1 > 0.0) || !(a2 > 0.0))
        throw config_error("negativity criterion requires positive coefficients");
    NegativityResult r{};
    r.m0 = std::pow(a1 / alpha, 1.0 / (1.0 - 1.0 / alpha));
    r.beta_at_m0 = a1 * std::pow(r.m0, 1.0 / alpha) - r.m0 + a2;
    const double lhs = alpha * std::log(a1) + (1.0 - alpha) * std::log(a2);
    const double rhs = (1.0 - alpha) * std::log1p(-alpha) + alpha * std::log(alpha);
    // Ties within rounding resolve as "not negative": the criterion is strict.
    const double guard = 8.0 * 2.220446049250313e-16 * (std::abs(lhs) + std::abs(rhs) + 1.0);
    r.is_negative = lhs < rhs - guard;
    return r;
}

double kernel_bound_ratio_scan(const KernelConfig& cfg, int lattice) {
    if (lattice < 8) throw config_error("ratio scan lattice too small");
    std::vector<double> tab(static_cast<std::size_t>(2 * lattice - 1), 0.0);
    for (int l = 1; l <= 2 * lattice - 2; ++l)
        tab[static_cast<std::size_t>(l)] = kernel_profile(cfg, l * kPi / lattice);
    double best = 0.0;
    for (int i = 1; i < lattice; ++i) {
        const double x = i * kPi / lattice;
        for (int j = 1; j < lattice; ++j) {
            if (i == j) continue;
            const double y = j * kPi / lattice;
            const double k = (tab[static_cast<std::size_t>(i + j)] -
                              tab[static_cast<std::size_t>(std::abs(i - j))]) /
                             kTwoPi;
            const double half = 0.5 * std::abs(x - y);
            const double denom = std::sin(y) * (std::cos(half) / std::sin(half) + 1.0);
            best = std::max(best, k / denom);
        }
    }
    return best;
}

double kernel_min_scan(const KernelConfig& cfg, int lattice) {
    if (lattice < 8) throw config_error("kernel min scan lattice too small");
    std::vector<double> tab(static_cast<std::size_t>(2 * lattice - 1), 0.0);
    for (int l = 1; l <= 2 * lattice - 2; ++l)
        tab[static_cast<std::size_t>(l)] = kernel_profile(cfg, l * kPi / lattice);
    double worst = 1e300;
    for (int i = 1; i < lattice; ++i)
        for (int j = 1; j < lattice; ++j) {
            if (i == j) continue;
            const double k = (tab[static_cast<std::size_t>(i + j)] -
                              tab[static_cast<std::size_t>(std::abs(i - j))]) /
                             kTwoPi;
            worst = std::min(worst, k);
        }
    return worst;
}

double concavity_quartic(int m, double theta) {
    if (m < 3) throw config_error("concavity bounds require m >= 3");
    const double m2 = static_cast<double>(m) * m;
    const double m4 = m2 * m2;
    const double t2 = theta * theta;
    return -0.5 + 24.0 * (t2 - 2.0 * t2 * t2) / (m4 - 4.0 * m2) +
           6.0 / m2 * (theta - (1.0 + kLog2) * t2) + 24.0 / m4 * kTauValue * t2;
}

double concavity_cubic(int m, double theta) {
    if (m < 3) throw config_error("concavity bounds require m >= 3");
    const double m2 = static_cast<double>(m) * m;
    const double m4 = m2 * m2;
    return -48.0 * theta * theta * theta / (m4 - 4.0 * m2) + 6.0 / m2 * theta - 0.5;
}

ConcavityScan concavity_chain_scan(int m, int points) {
    if (points < 16) throw config_error("concavity scan needs at least 16 points");
    const KernelConfig cfg(m, Family::sqg_folded);
    ConcavityScan out{-1e300, -1e300, -1e300};
    for (int i = 1; i <= points; ++i) {
        const double x = i * kPi / (points + 1);
        const double theta = std::sin(0.5 * x);
        const double lhs = theta * theta * kernel_profile_second(cfg, x);
        const double p = concavity_quartic(m, theta);
        const double q = concavity_cubic(m, theta);
        out.max_excess_over_quartic = std::max(out.max_excess_over_quartic, lhs - p);
        out.max_quartic_over_cubic = std::max(out.max_quartic_over_cubic, p - q);
        out.max_cubic = std::max(out.max_cubic, q);
    }
    return out;
}

} // namespace sqgsteady
