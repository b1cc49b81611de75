#pragma once

#include <vector>

namespace sqgsteady {

// Finite sine expansion w(x) = sum_{k=1}^{K} a_k sin(kx) on [0, pi].
// coeffs[k-1] stores a_k.
struct SineSeries {
    std::vector<double> coeffs;

    SineSeries() = default;
    explicit SineSeries(int modes) : coeffs(static_cast<std::size_t>(modes), 0.0) {}

    int modes() const { return static_cast<int>(coeffs.size()); }

    double& operator[](int k) { return coeffs[static_cast<std::size_t>(k - 1)]; }
    double operator[](int k) const { return coeffs[static_cast<std::size_t>(k - 1)]; }

    // Pointwise evaluation by stable angle recurrence, O(modes).
    double eval(double x) const;

    // max_k |a_k|
    double coeff_sup() const;
};

// Samples on the uniform closed grid x_j = j*pi/N, j = 0..N.
// values.size() == N + 1.
struct GridFunction {
    int grid_size = 0;
    std::vector<double> values;

    GridFunction() = default;
    explicit GridFunction(int n)
        : grid_size(n), values(static_cast<std::size_t>(n) + 1, 0.0) {}

    double node(int j) const;
    double sup_norm() const;
};

// Synthesis: sample the series on the closed N-grid.
// Requires modes <= N - 1, else resolution_error.
GridFunction to_grid(const SineSeries& s, int n);

// Cosine synthesis: sum_k b[k-1] cos(kx) on the closed N-grid.
// Requires b.size() <= N - 1, else resolution_error.
GridFunction cosine_to_grid(const std::vector<double>& b, int n);

// Analysis by the trapezoid rule, exact for band-limited input:
// a_k = (2/N) sum_{j=1}^{N-1} w_j sin(k j pi / N).
// Requires modes <= N - 1, else aliasing_error.
SineSeries to_coefficients(const GridFunction& w, int modes);

// integral_0^pi w(x) sin(x) dx; trapezoid on the grid, (pi/2) a_1 on a series.
double weighted_sine_integral(const GridFunction& w);
double weighted_sine_integral(const SineSeries& s);

// max(w, 0)^p pointwise. clamped_mass, when non-null, receives the
// trapezoid mass (pi/N) * sum |negative part| that was clamped away.
GridFunction pointwise_power(const GridFunction& w, double p, double* clamped_mass = nullptr);

// (pi/N) * sum of pointwise products over interior nodes; the grid
// counterpart of the L2 pairing (endpoint terms vanish for sine data).
double grid_inner(const GridFunction& a, const GridFunction& b);

} // namespace sqgsteady
