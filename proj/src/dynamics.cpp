#include "sqgsteady/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sqgsteady {

MultiplierOperator EvolutionConfig::make_operator() const {
    switch (family) {
        case Family::sqg_unfolded: return MultiplierOperator::sqg_unfolded();
        case Family::sqg_folded: return MultiplierOperator::sqg_folded(m);
        case Family::degregorio: return MultiplierOperator::degregorio(m);
        default:
            throw config_error("unsupported evolution family");
    }
}

void EvolutionConfig::validate() const {
    if (modes < 1) throw config_error("evolution needs at least one mode");
    if (grid < 3 * modes)
        throw aliasing_error("evolution grid " + std::to_string(grid) +
                             " is below the de-aliasing bound 3K = " + std::to_string(3 * modes));
    if (dt <= 0.0) throw config_error("time step must be positive");
    if (t_end < dt) throw config_error("horizon must cover at least one step");
    if (blowup_threshold <= 0.0) throw config_error("blow-up threshold must be positive");
    make_operator();
}

instability_error::instability_error(const std::string& msg, double time)
    : error(msg), blowup_time(time) {}

SineSeries evolution_rhs(const SineSeries& f, const EvolutionConfig& cfg) {
    const MultiplierOperator op = cfg.make_operator();
    const SineSeries sf = apply(op, f);
    const GridFunction f_grid = to_grid(f, cfg.grid);
    const GridFunction sf_grid = to_grid(sf, cfg.grid);
    const GridFunction df = differentiate_on_grid(f, cfg.grid);
    const GridFunction dsf = differentiate_on_grid(sf, cfg.grid);

    GridFunction q(cfg.grid);
    for (std::size_t j = 0; j < q.values.size(); ++j)
        q.values[j] = cfg.alpha * sf_grid.values[j] * df.values[j] -
                      f_grid.values[j] * dsf.values[j];
    return to_coefficients(q, cfg.modes);
}

namespace {

void axpy_series(SineSeries& y, double a, const SineSeries& x) {
    for (std::size_t i = 0; i < y.coeffs.size(); ++i) y.coeffs[i] += a * x.coeffs[i];
}

} // namespace

EvolutionResult evolve(const SineSeries& f0, const EvolutionConfig& cfg) {
    cfg.validate();
    if (f0.modes() > cfg.modes)
        throw aliasing_error("initial state carries " + std::to_string(f0.modes()) +
                             " modes, budget is " + std::to_string(cfg.modes));

    SineSeries f(cfg.modes);
    for (int k = 1; k <= f0.modes(); ++k) f[k] = f0[k];

    const GridFunction f0_grid = to_grid(f, cfg.grid);
    const double base = f0_grid.sup_norm();
    if (base == 0.0) throw degenerate_input_error("evolution started from the zero state");

    const long long steps = static_cast<long long>(std::llround(cfg.t_end / cfg.dt));

    EvolutionResult out;
    out.history.reserve(static_cast<std::size_t>(steps));

    for (long long s = 0; s < steps; ++s) {
        const SineSeries k1 = evolution_rhs(f, cfg);
        SineSeries stage = f;
        axpy_series(stage, 0.5 * cfg.dt, k1);
        const SineSeries k2 = evolution_rhs(stage, cfg);
        stage = f;
        axpy_series(stage, 0.5 * cfg.dt, k2);
        const SineSeries k3 = evolution_rhs(stage, cfg);
        stage = f;
        axpy_series(stage, cfg.dt, k3);
        const SineSeries k4 = evolution_rhs(stage, cfg);

        axpy_series(f, cfg.dt / 6.0, k1);
        axpy_series(f, cfg.dt / 3.0, k2);
        axpy_series(f, cfg.dt / 3.0, k3);
        axpy_series(f, cfg.dt / 6.0, k4);

        const double t = (s + 1) * cfg.dt;
        const GridFunction cur = to_grid(f, cfg.grid);
        const double sup = cur.sup_norm();
        if (!std::isfinite(sup) || sup > cfg.blowup_threshold)
            throw instability_error("state norm " + std::to_string(sup) +
                                        " crossed the blow-up threshold at t = " +
                                        std::to_string(t),
                                    t);
        double diff = 0.0;
        for (std::size_t j = 0; j < cur.values.size(); ++j)
            diff = std::max(diff, std::abs(cur.values[j] - f0_grid.values[j]));
        out.history.push_back({t, diff / base, sup});
    }

    out.state = std::move(f);
    out.drift = out.history.empty() ? 0.0 : out.history.back().drift;
    return out;
}

} // namespace sqgsteady
