#pragma once

#include "sqgsteady/errors.hpp"
#include "sqgsteady/operators.hpp"
#include "sqgsteady/sine_series.hpp"

#include <utility>
#include <vector>

namespace sqgsteady {

struct EvolutionConfig {
    Family family = Family::sqg_unfolded;
    int m = 1;
    double alpha = 2.0;
    int modes = 48;
    int grid = 144; // must be >= 3 * modes for exact quadratic projection
    double dt = 1e-4;
    double t_end = 0.1;
    double blowup_threshold = 1e6;

    MultiplierOperator make_operator() const;
    void validate() const;
};

// Sup norm crossed blowup_threshold during integration.
struct instability_error : error {
    instability_error(const std::string& msg, double time);
    double blowup_time;
};

// Spectral right-hand side alpha (S f) f' - f (S f)', projected to the
// mode budget; the 3K de-aliased grid makes the quadratic projection exact.
SineSeries evolution_rhs(const SineSeries& f, const EvolutionConfig& cfg);

struct EvolutionSample {
    double time;
    double drift;    // sup|f(t) - f(0)| / sup|f(0)|
    double sup_norm; // sup|f(t)| on the grid
};

struct EvolutionResult {
    SineSeries state;
    double drift = 0.0;
    std::vector<EvolutionSample> history; // one sample per accepted step
};

// Classical RK4 with fixed step; throws instability_error on blow-up.
EvolutionResult evolve(const SineSeries& f0, const EvolutionConfig& cfg);

} // namespace sqgsteady
