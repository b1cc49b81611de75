#pragma once

namespace sqgsteady {

// Clausen family on the full line (2*pi periodic):
//   cl2(x) = sum sin(kx)/k^2    cl3(x) = sum cos(kx)/k^3
//   cl4(x) = sum sin(kx)/k^4    cl5(x) = sum cos(kx)/k^5
// Evaluated by two-branch zeta series: a log-weighted expansion near 0
// and a reflected expansion near pi, each accurate to ~1e-14 absolute.
double cl2(double x);
double cl3(double x);
double cl4(double x);
double cl5(double x);

inline constexpr double kZeta3 = 1.2020569031595943;
inline constexpr double kZeta5 = 1.0369277551433699;

// Antiderivatives F_p(t) = int_0^t s^p log(2 - 2 cos s) ds, p = 0..3,
// in closed Clausen form. Used to cross-check the kernel quadrature.
double log_moment_antiderivative(int p, double t);

} // namespace sqgsteady
