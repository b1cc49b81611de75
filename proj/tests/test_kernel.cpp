#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqgsteady/clausen.hpp"
#include "sqgsteady/errors.hpp"
#include "sqgsteady/kernel.hpp"
#include "sqgsteady/operators.hpp"
#include "sqgsteady/sine_series.hpp"

#include "reference_values.hpp"

#include <cmath>
#include <numbers>

using namespace sqgsteady;

namespace {

constexpr double pi = std::numbers::pi;

GridFunction sampled_mode(int k, int n) {
    SineSeries s(k);
    s[k] = 1.0;
    return to_grid(s, n);
}

double rel_sup_distance(const GridFunction& a, const GridFunction& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < a.values.size(); ++j) {
        num = std::max(num, std::abs(a.values[j] - b.values[j]));
        den = std::max(den, std::abs(b.values[j]));
    }
    return num / den;
}

} // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(KernelConfig(3));
    CHECK_NOTHROW(KernelConfig(1, Family::degregorio));
    CHECK_THROWS_AS(KernelConfig(2), config_error);
    CHECK_THROWS_AS(KernelConfig(3, Family::sqg_folded, 4), config_error);
    CHECK_THROWS_AS(KernelConfig(3, Family::sqg_unfolded), config_error);
    // raw tail 3/(pi m^2 T^2) = 4.05e-7 at m=3, T=512; demanding 1e-8 fails
    CHECK_THROWS_AS(KernelConfig(3, Family::sqg_folded, 512, 1e-8), config_error);
}

TEST_CASE("correction series matches direct summation") {
    const KernelConfig cfg(3);
    for (double u : {0.3, 1.0, 2.0, 3.0, 5.0}) {
        double direct = 0.0;
        for (int k = 200000; k >= 1; --k)
            direct += std::cos(k * u) / (9.0 * k * k * k - 4.0 * k);
        CHECK(std::abs(kernel_correction_series(cfg, u) - direct) < 1e-10);
    }
    const KernelConfig dg(1, Family::degregorio);
    CHECK(kernel_correction_series(dg, 1.0) == 0.0);
}

TEST_CASE("profile value against the reference") {
    const KernelConfig cfg(3);
    CHECK(std::abs(kernel_profile(cfg, pi / 2) - refvals::phi3_half_pi) < 1e-12);
    // even and 2 pi periodic
    for (double u : {0.4, 1.7, 2.9}) {
        CHECK(std::abs(kernel_profile(cfg, -u) - kernel_profile(cfg, u)) < 1e-12);
        CHECK(std::abs(kernel_profile(cfg, 2 * pi - u) - kernel_profile(cfg, u)) < 1e-12);
        CHECK(std::abs(kernel_profile(cfg, u + 2 * pi) - kernel_profile(cfg, u)) < 1e-12);
    }
    CHECK_THROWS_AS((void)kernel_profile(cfg, 0.0), singularity_error);
    CHECK_THROWS_AS((void)kernel_profile(cfg, 2 * pi), singularity_error);
}

TEST_CASE("profile derivatives agree with finite differences") {
    const KernelConfig cfg(3);
    const double h = 1e-6;
    for (double u : {0.5, 1.2, 2.1, 3.0}) {
        const double fd1 = (kernel_profile(cfg, u + h) - kernel_profile(cfg, u - h)) / (2 * h);
        CHECK(std::abs(fd1 - kernel_profile_prime(cfg, u)) < 1e-7);
        const double fd2 =
            (kernel_profile_prime(cfg, u + h) - kernel_profile_prime(cfg, u - h)) / (2 * h);
        CHECK(std::abs(fd2 - kernel_profile_second(cfg, u)) < 1e-6);
    }
}

TEST_CASE("kernel point values") {
    const KernelConfig cfg(3);
    CHECK(std::abs(kernel_value(cfg, pi / 2, pi / 4) - refvals::k3_half_quarter) < 1e-12);
    const KernelConfig dg(1, Family::degregorio);
    CHECK(std::abs(kernel_value(dg, pi / 2, pi / 4) - refvals::k3_half_quarter_log_part) <
          1e-12);
    CHECK_THROWS_AS((void)kernel_value(cfg, 1.0, 1.0), singularity_error);
}

TEST_CASE("quadrature weights are even in the offset") {
    const KernelConfig cfg(3);
    const KernelQuadrature quad(cfg, 64);
    for (int d = 1; d < 64; ++d)
        CHECK(std::abs(quad.node_weight(d) - quad.node_weight(128 - d)) < 1e-15);
}

TEST_CASE("quadrature reproduces the multiplier on low modes") {
    const KernelConfig cfg(3);
    const MultiplierOperator op = MultiplierOperator::sqg_folded(3);
    const int n = 512;
    for (int k : {1, 2, 3}) {
        const GridFunction mode = sampled_mode(k, n);
        const GridFunction out = apply_kernel(mode, cfg);
        GridFunction expect = mode;
        for (auto& v : expect.values) v *= -op.symbol(k);
        CHECK(rel_sup_distance(out, expect) < 1e-8);
    }
    const KernelConfig dg(1, Family::degregorio);
    const GridFunction ground = sampled_mode(1, n);
    const GridFunction out = apply_kernel(ground, dg);
    CHECK(rel_sup_distance(out, ground) < 1e-8); // rho = 1 for this family
}

TEST_CASE("windowed integral reference values") {
    const KernelConfig cfg(3);
    for (std::size_t i = 0; i < std::size(refvals::i_delta_deltas); ++i) {
        const double got = i_delta(cfg, refvals::i_delta_deltas[i]);
        CHECK(std::abs(got - refvals::i_delta_values[i]) < 1e-6 * refvals::i_delta_values[i]);
    }
    // shrinking windows carry shrinking mass
    CHECK(i_delta(cfg, 1e-2) > i_delta(cfg, 1e-3));
}

TEST_CASE("rho window profile") {
    const double delta = 1e-2;
    CHECK(std::abs(rho_delta_argmax(delta) - pi / 2) < 1e-6);
    CHECK(std::abs(rho_delta(0.0, 0.7) + 2.0 * cl2(0.7)) < 1e-14);
    // maximum beats nearby samples
    const double peak = rho_delta(pi / 2, delta);
    CHECK(peak >= rho_delta(pi / 2 - 0.3, delta));
    CHECK(peak >= rho_delta(pi / 2 + 0.3, delta));
}

TEST_CASE("psi window bound") {
    CHECK(std::abs(psi(1e-3) - refvals::psi_at_1e3) < 1e-12);
    CHECK(std::abs(psi(1e-6) - refvals::psi_at_1e6) < 1e-12);
    CHECK(std::abs(refvals::psi_limit - 1.25 * std::log(4.0)) < 1e-15);
    CHECK(psi(1e-6) < refvals::psi_limit + 1e-12);
    CHECK(psi(1e-2) < psi(1e-3)); // increasing toward the limit
    CHECK_THROWS_AS((void)psi(0.0), config_error);
}

TEST_CASE("tau series") {
    CHECK(std::abs(tau() - refvals::tau_value) < 1e-12);
    CHECK(std::abs(refvals::tau_value - (2.0 - pi * pi / 6.0)) < 1e-15);
    // partial sums bracket the limit: tail below 1/(2 T^2)
    const double coarse = tau(100);
    CHECK(coarse < refvals::tau_value);
    CHECK(refvals::tau_value - coarse < 0.5 / (100.0 * 100.0));
}

TEST_CASE("negativity criterion at the boundary instance") {
    const NegativityResult r = negativity_criterion(1.0, 0.25, 0.5);
    CHECK(std::abs(r.m0 - 0.5) < 1e-15);
    CHECK(std::abs(r.beta_at_m0) < 1e-12);
    CHECK_FALSE(r.is_negative); // strict inequality resolves ties upward

    const NegativityResult neg = negativity_criterion(1.0, 0.20, 0.5);
    CHECK(neg.is_negative);
    CHECK(neg.beta_at_m0 < 0.0);

    const NegativityResult pos = negativity_criterion(1.0, 0.30, 0.5);
    CHECK_FALSE(pos.is_negative);
    CHECK(pos.beta_at_m0 > 0.0);

    CHECK_THROWS_AS((void)negativity_criterion(1.0, 0.25, 1.0), config_error);
    CHECK_THROWS_AS((void)negativity_criterion(0.0, 0.25, 0.5), config_error);
}

TEST_CASE("lattice scans match frozen references") {
    const KernelConfig cfg(3);
    CHECK(std::abs(kernel_bound_ratio_scan(cfg) - refvals::bound_ratio_m3) < 1e-9);
    CHECK(kernel_bound_ratio_scan(cfg) < 4.0);
    const KernelConfig dg(1, Family::degregorio);
    CHECK(std::abs(kernel_bound_ratio_scan(dg) - refvals::bound_ratio_degregorio) < 1e-9);
    CHECK(kernel_bound_ratio_scan(dg) < 1.0 / pi);
    CHECK(kernel_min_scan(cfg, 201) > 0.0);
    CHECK(kernel_min_scan(dg, 201) > 0.0);
}

TEST_CASE("concavity majorant chain") {
    for (int m : {3, 5, 8}) {
        const ConcavityScan scan = concavity_chain_scan(m);
        CHECK(scan.max_excess_over_quartic <= 1e-12);
        CHECK(scan.max_quartic_over_cubic <= 1e-12);
        CHECK(scan.max_cubic < 0.0);
    }
    CHECK_THROWS_AS((void)concavity_chain_scan(2), config_error);

    // spot check the closed forms at theta = 1/2, m = 3
    const double m2 = 9.0, m4 = 81.0;
    const double theta = 0.5;
    const double tau_c = 2.0 - pi * pi / 6.0;
    const double quartic = -0.5 + 24.0 * (theta * theta - 2.0 * std::pow(theta, 4)) / (m4 - 4 * m2) +
                           (6.0 / m2) * (theta - (1.0 + std::log(2.0)) * theta * theta) +
                           (24.0 / m4) * tau_c * theta * theta;
    CHECK(std::abs(concavity_quartic(3, theta) - quartic) < 1e-15);
    const double cubic =
        -48.0 * std::pow(theta, 3) / (m4 - 4 * m2) + (6.0 / m2) * theta - 0.5;
    CHECK(std::abs(concavity_cubic(3, theta) - cubic) < 1e-15);
}

TEST_CASE("windowed integral is continuous at the clip boundary") {
    const KernelConfig cfg(3);
    const double delta = 0.2;
    // window centered close to 0 clips at the left endpoint
    const double near = windowed_kernel_integral(cfg, 0.05, delta);
    CHECK(std::isfinite(near));
    const double interior = windowed_kernel_integral(cfg, pi / 2, delta);
    CHECK(interior > 0.0);
}
