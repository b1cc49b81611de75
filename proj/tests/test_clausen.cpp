#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqgsteady/clausen.hpp"
#include "sqgsteady/errors.hpp"

#include "reference_values.hpp"

#include <cmath>
#include <numbers>

using namespace sqgsteady;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("values match the independent reference table") {
    for (const auto& row : refvals::clausen_samples) {
        const double x = row[0];
        CHECK(std::abs(cl2(x) - row[1]) < 1e-13);
        CHECK(std::abs(cl3(x) - row[2]) < 1e-13);
        CHECK(std::abs(cl4(x) - row[3]) < 1e-13);
        CHECK(std::abs(cl5(x) - row[4]) < 1e-13);
    }
}

TEST_CASE("special values") {
    CHECK(std::abs(cl2(pi / 2) - refvals::catalan) < 2e-15);
    CHECK(std::abs(cl3(0.0) - kZeta3) < 1e-15);
    CHECK(std::abs(cl5(0.0) - kZeta5) < 1e-15);
    // sine-type members vanish at 0 and pi
    CHECK(cl2(0.0) == 0.0);
    CHECK(cl4(0.0) == 0.0);
    CHECK(std::abs(cl2(pi)) < 1e-15);
    CHECK(std::abs(cl4(pi)) < 1e-15);
    // cosine-type members alternate at pi: sum (-1)^k / k^s
    CHECK(std::abs(cl3(pi) + 0.75 * kZeta3) < 1e-15);
    CHECK(std::abs(cl5(pi) + 0.9375 * kZeta5) < 1e-15);
}

TEST_CASE("parity and periodicity") {
    for (double x : {0.3, 1.1, 2.6}) {
        CHECK(std::abs(cl2(-x) + cl2(x)) < 1e-14);
        CHECK(std::abs(cl4(-x) + cl4(x)) < 1e-14);
        CHECK(std::abs(cl3(-x) - cl3(x)) < 1e-14);
        CHECK(std::abs(cl5(-x) - cl5(x)) < 1e-14);
        CHECK(std::abs(cl2(x + 2 * pi) - cl2(x)) < 1e-13);
        CHECK(std::abs(cl3(x - 2 * pi) - cl3(x)) < 1e-13);
    }
}

TEST_CASE("duplication identity for cl2") {
    // cl2(2x) = 2 cl2(x) - 2 cl2(pi - x)
    for (double x : {0.2, 0.7, 1.2, 1.5}) {
        const double lhs = cl2(2 * x);
        const double rhs = 2 * cl2(x) - 2 * cl2(pi - x);
        CHECK(std::abs(lhs - rhs) < 2e-14);
    }
}

TEST_CASE("cl2 derivative is the negative half log") {
    // d/dx cl2(x) = -log(2 sin(x/2)); central differences
    const double h = 1e-6;
    for (double x : {0.4, 1.0, 2.0, 2.9}) {
        const double fd = (cl2(x + h) - cl2(x - h)) / (2 * h);
        const double exact = -std::log(2.0 * std::sin(x / 2));
        CHECK(std::abs(fd - exact) < 1e-9);
    }
}

TEST_CASE("moment antiderivatives differentiate back to the integrand") {
    // F_p'(t) = t^p log(2 - 2 cos t)
    const double h = 1e-5;
    for (int p = 0; p <= 3; ++p) {
        for (double t : {0.5, 1.3, 2.4}) {
            const double fd =
                (log_moment_antiderivative(p, t + h) - log_moment_antiderivative(p, t - h)) /
                (2 * h);
            const double exact = std::pow(t, p) * std::log(2.0 - 2.0 * std::cos(t));
            CHECK(std::abs(fd - exact) < 1e-8 * (1.0 + std::abs(exact)));
        }
        CHECK(log_moment_antiderivative(p, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    }
    CHECK_THROWS_AS((void)log_moment_antiderivative(4, 1.0), config_error);
    CHECK_THROWS_AS((void)log_moment_antiderivative(-1, 1.0), config_error);
}

TEST_CASE("zeroth moment is minus two cl2") {
    for (double t : {0.3, 1.0, 2.5, 3.1})
        CHECK(std::abs(log_moment_antiderivative(0, t) + 2.0 * cl2(t)) < 1e-14);
}
