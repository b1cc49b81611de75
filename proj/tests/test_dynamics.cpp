#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqgsteady/dynamics.hpp"
#include "sqgsteady/errors.hpp"
#include "sqgsteady/sine_series.hpp"
#include "sqgsteady/solver.hpp"

#include <cmath>

using namespace sqgsteady;

namespace {

double state_distance(const SineSeries& a, const SineSeries& b, int n) {
    const GridFunction ga = to_grid(a, n);
    const GridFunction gb = to_grid(b, n);
    double d = 0.0;
    for (int j = 0; j <= n; ++j) d = std::max(d, std::abs(ga.values[j] - gb.values[j]));
    return d;
}

} // namespace

TEST_CASE("config validation") {
    EvolutionConfig cfg;
    CHECK_NOTHROW(cfg.validate());

    cfg.grid = 3 * cfg.modes - 1; // dealiasing the quadratic term needs 3K
    CHECK_THROWS_AS(cfg.validate(), aliasing_error);
    cfg.grid = 3 * cfg.modes;

    cfg.t_end = 0.5 * cfg.dt;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.t_end = 0.1;

    cfg.modes = 0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
}

TEST_CASE("initial state must fit the mode budget and be nonzero") {
    EvolutionConfig cfg;
    cfg.modes = 12;
    cfg.grid = 36;
    SineSeries wide(20);
    wide[20] = 1.0;
    CHECK_THROWS_AS((void)evolve(wide, cfg), aliasing_error);
    CHECK_THROWS_AS((void)evolve(SineSeries(4), cfg), degenerate_input_error);
}

TEST_CASE("rhs vanishes on the linear eigenstate") {
    EvolutionConfig cfg;
    cfg.alpha = 1.0;
    cfg.modes = 12;
    cfg.grid = 36;
    SineSeries f(12);
    f[3] = 0.7; // single active mode of the unfolded multiplier
    const SineSeries rhs = evolution_rhs(f, cfg);
    CHECK(rhs.coeff_sup() < 1e-15);

    // at alpha = 2 the same state is genuinely non-stationary
    cfg.alpha = 2.0;
    const SineSeries rhs2 = evolution_rhs(f, cfg);
    CHECK(rhs2.coeff_sup() > 1e-3);
}

TEST_CASE("linear steady state stays put") {
    SolverConfig scfg;
    scfg.alpha = 1.0;
    scfg.modes = 64;
    scfg.grid = 256;
    const SolutionBundle bundle = solve(scfg);

    EvolutionConfig cfg;
    cfg.alpha = 1.0;
    cfg.modes = bundle.coeffs_f.modes();
    cfg.grid = 3 * cfg.modes;
    cfg.dt = 1e-3;
    cfg.t_end = 0.05;
    const EvolutionResult r = evolve(bundle.coeffs_f, cfg);
    CHECK(r.drift < 1e-10);
    CHECK(static_cast<long long>(r.history.size()) == 50);
    CHECK(r.history.front().time == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(r.history.back().time == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("RK4 converges at fourth order") {
    SineSeries f0(6);
    f0[3] = 1.0;
    f0[6] = 0.1;

    EvolutionConfig cfg;
    cfg.modes = 48;
    cfg.grid = 144;
    cfg.t_end = 0.1;

    cfg.dt = 2.5e-5;
    const SineSeries ref = evolve(f0, cfg).state;

    // every step divides t_end exactly so the horizons line up
    double errs[3];
    const double dts[3] = {4e-3, 2e-3, 1e-3};
    for (int i = 0; i < 3; ++i) {
        cfg.dt = dts[i];
        errs[i] = state_distance(evolve(f0, cfg).state, ref, cfg.grid);
    }
    for (int i = 0; i + 1 < 3; ++i) {
        const double ratio = errs[i] / errs[i + 1];
        INFO("halving ratio ", ratio);
        CHECK(ratio > 13.0); // fourth order halves to ~16
        CHECK(ratio < 24.0);
    }
}

TEST_CASE("blow-up raises with the crossing time") {
    SineSeries f0(3);
    f0[3] = 1.0;

    EvolutionConfig cfg;
    cfg.modes = 12;
    cfg.grid = 36;
    cfg.dt = 1e-3;
    cfg.t_end = 0.1;
    cfg.blowup_threshold = 0.5; // below the initial sup: trips on step one
    try {
        (void)evolve(f0, cfg);
        FAIL("expected instability_error");
    } catch (const instability_error& e) {
        CHECK(e.blowup_time == doctest::Approx(1e-3).epsilon(1e-12));
    }
}

TEST_CASE("drift history is relative to the initial sup") {
    SineSeries f0(6);
    f0[3] = 2.0;

    EvolutionConfig cfg;
    cfg.modes = 24;
    cfg.grid = 72;
    cfg.dt = 1e-3;
    cfg.t_end = 0.01;
    const EvolutionResult r = evolve(f0, cfg);
    REQUIRE_FALSE(r.history.empty());
    for (const EvolutionSample& s : r.history) {
        CHECK(s.drift >= 0.0);
        CHECK(std::isfinite(s.sup_norm));
    }
    CHECK(r.drift == r.history.back().drift);
}
