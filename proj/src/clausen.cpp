#include "sqgsteady/clausen.hpp"
#include "sqgsteady/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sqgsteady {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLog2 = std::numbers::ln2;

constexpr int kZetaTerms = 36;

// zeta(2n), n = 1..36; the series below converge geometrically in
// (x / 2pi)^2 <= 1/16, so 36 terms overshoot double precision.
constexpr double kZetaEven[kZetaTerms] = {
    1.6449340668482264, 1.0823232337111382, 1.0173430619844491,
    1.0040773561979443, 1.0009945751278181, 1.0002460865533080,
    1.0000612481350587, 1.0000152822594087, 1.0000038172932650,
    1.0000009539620339, 1.0000002384505027, 1.0000000596081891,
    1.0000000149015548, 1.0000000037253340, 1.0000000009313274,
    1.0000000002328312, 1.0000000000582077, 1.0000000000145519,
    1.0000000000036380, 1.0000000000009095, 1.0000000000002274,
    1.0000000000000568, 1.0000000000000142, 1.0000000000000036,
    1.0000000000000009, 1.0000000000000002, 1.0000000000000001,
    1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0,
};

double fold_period(double x) {
    x = std::fmod(x, kTwoPi);
    if (x < 0.0) x += kTwoPi;
    return x;
}

// Generic zeta-series accumulator: sum_n zeta(2n) * weight(n) * q^n with
// weight(n) = prod of the reciprocal linear factors passed by the caller.
template <typename Weight>
double zeta_sum(double q, Weight w, bool reflected) {
    double s = 0.0;
    double p = q;
    double four_n = 4.0;
    for (int n = 1; n <= kZetaTerms; ++n) {
        double term = kZetaEven[n - 1] * w(n) * p;
        if (reflected) term *= four_n - 1.0;
        s += term;
        if (term < 1e-18 * (1.0 + std::abs(s))) break;
        p *= q;
        four_n *= 4.0;
    }
    return s;
}

} // namespace

double cl2(double x) {
    x = fold_period(x);
    double sign = 1.0;
    if (x > kPi) {
        x = kTwoPi - x;
        sign = -1.0;
    }
    if (x == 0.0) return 0.0;
    if (x <= 0.5 * kPi) {
        const double t = x;
        const double q = (t / kTwoPi) * (t / kTwoPi);
        const double s = zeta_sum(q, [](int n) { return 1.0 / (n * (2.0 * n + 1.0)); }, false);
        return sign * (t - t * std::log(t) + t * s);
    }
    const double u = kPi - x;
    if (u == 0.0) return 0.0;
    const double q = (u / kTwoPi) * (u / kTwoPi);
    const double s = zeta_sum(q, [](int n) { return 1.0 / (n * (2.0 * n + 1.0)); }, true);
    return sign * (u * kLog2 - u * s);
}

double cl3(double x) {
    x = fold_period(x);
    if (x > kPi) x = kTwoPi - x;
    if (x <= 0.5 * kPi) {
        const double t = x;
        if (t == 0.0) return kZeta3;
        const double q = (t / kTwoPi) * (t / kTwoPi);
        const double s = zeta_sum(
            q, [](int n) { return 1.0 / (n * (2.0 * n + 1.0) * (2.0 * n + 2.0)); }, false);
        return kZeta3 - 0.75 * t * t + 0.5 * t * t * std::log(t) - t * t * s;
    }
    const double u = kPi - x;
    const double q = (u / kTwoPi) * (u / kTwoPi);
    const double s = zeta_sum(
        q, [](int n) { return 1.0 / (n * (2.0 * n + 1.0) * (2.0 * n + 2.0)); }, true);
    return -0.75 * kZeta3 + 0.5 * u * u * kLog2 - u * u * s;
}

double cl4(double x) {
    x = fold_period(x);
    double sign = 1.0;
    if (x > kPi) {
        x = kTwoPi - x;
        sign = -1.0;
    }
    if (x == 0.0) return 0.0;
    if (x <= 0.5 * kPi) {
        const double t = x;
        const double q = (t / kTwoPi) * (t / kTwoPi);
        const double s = zeta_sum(
            q,
            [](int n) { return 1.0 / (n * (2.0 * n + 1.0) * (2.0 * n + 2.0) * (2.0 * n + 3.0)); },
            false);
        const double t3 = t * t * t;
        return sign * (kZeta3 * t + t3 / 6.0 * std::log(t) - 11.0 / 36.0 * t3 - t3 * s);
    }
    const double u = kPi - x;
    const double q = (u / kTwoPi) * (u / kTwoPi);
    const double s = zeta_sum(
        q,
        [](int n) { return 1.0 / (n * (2.0 * n + 1.0) * (2.0 * n + 2.0) * (2.0 * n + 3.0)); },
        true);
    const double u3 = u * u * u;
    return sign * (0.75 * kZeta3 * u - u3 / 6.0 * kLog2 + u3 * s);
}

double cl5(double x) {
    x = fold_period(x);
    if (x > kPi) x = kTwoPi - x;
    if (x <= 0.5 * kPi) {
        const double t = x;
        if (t == 0.0) return kZeta5;
        const double q = (t / kTwoPi) * (t / kTwoPi);
        const double s = zeta_sum(
            q,
            [](int n) {
                return 1.0 / (n * (2.0 * n + 1.0) * (2.0 * n + 2.0) * (2.0 * n + 3.0) *
                              (2.0 * n + 4.0));
            },
            false);
        const double t2 = t * t;
        const double t4 = t2 * t2;
        return kZeta5 - 0.5 * kZeta3 * t2 - t4 / 24.0 * std::log(t) + 25.0 / 288.0 * t4 + t4 * s;
    }
    const double u = kPi - x;
    const double q = (u / kTwoPi) * (u / kTwoPi);
    const double s = zeta_sum(
        q,
        [](int n) {
            return 1.0 /
                   (n * (2.0 * n + 1.0) * (2.0 * n + 2.0) * (2.0 * n + 3.0) * (2.0 * n + 4.0));
        },
        true);
    const double u2 = u * u;
    const double u4 = u2 * u2;
    return -15.0 / 16.0 * kZeta5 + 0.375 * kZeta3 * u2 - u4 / 24.0 * kLog2 + u4 * s;
}

double log_moment_antiderivative(int p, double t) {
    switch (p) {
        case 0:
            return -2.0 * cl2(t);
        case 1:
            return -2.0 * (t * cl2(t) + cl3(t) - kZeta3);
        case 2:
            return -2.0 * (t * t * cl2(t) + 2.0 * t * cl3(t) - 2.0 * cl4(t));
        case 3:
            return -2.0 * (t * t * t * cl2(t) + 3.0 * t * t * cl3(t) - 6.0 * t * cl4(t) -
                           6.0 * cl5(t) + 6.0 * kZeta5);
        default:
            throw config_error("log moment antiderivative implemented for p = 0..3, got " +
                               std::to_string(p));
    }
}

} // namespace sqgsteady
