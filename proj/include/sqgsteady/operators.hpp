#pragma once

#include "sqgsteady/sine_series.hpp"

#include <string>

namespace sqgsteady {

enum class Family { sqg_folded, sqg_unfolded, degregorio, remainder };

const char* family_name(Family f);
Family family_from_name(const std::string& name); // config_error on unknown

// Fourier multiplier acting diagonally on sine modes. Each family fixes
// the symbol sigma(k); apply maps a_k -> sigma(k) a_k.
class MultiplierOperator {
public:
    static MultiplierOperator sqg_folded(int m);   // m >= 3
    static MultiplierOperator sqg_unfolded();
    static MultiplierOperator degregorio(int m);   // symbol independent of m
    static MultiplierOperator remainder(int m);    // m >= 3

    Family family() const { return family_; }
    int fold() const { return m_; }

    // sigma(k) for k >= 1. Zero symbols are genuine (not underflow):
    // modes k <= 2 of sqg_unfolded are annihilated.
    double symbol(int k) const;

    // -sigma(1); the eigenvalue on the ground mode, positive for the
    // families used by the solver.
    double rho() const;

private:
    MultiplierOperator(Family f, int m) : family_(f), m_(m) {}
    Family family_;
    int m_;
};

SineSeries apply(const MultiplierOperator& op, const SineSeries& s);

// Divides by the symbol; throws singular_mode_error if some mode with a
// vanishing symbol carries a nonzero coefficient, and zeroes it otherwise.
SineSeries apply_inverse(const MultiplierOperator& op, const SineSeries& s);

// Spectral derivative sum_k k a_k cos(kx) sampled on the closed N-grid.
GridFunction differentiate_on_grid(const SineSeries& s, int n);

// For f supported on modes {m, 2m, 3m, ...} with folded profile
// g_j = f_{jm}, measures sup_j |(S_m g)(y_j)/m - (S f)(y_j / m)| over the
// closed N-grid, where S is the unfolded multiplier and S_m the folded one.
// Identically zero in exact arithmetic.
double folding_residual(const SineSeries& f, int m, int n);

} // namespace sqgsteady
