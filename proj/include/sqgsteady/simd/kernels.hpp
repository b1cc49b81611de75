#pragma once

#include <cstddef>

namespace sqgsteady::simd {

// Hot inner loops used by the transform and convolution engines.
// Each implementation must produce results equal to the scalar one
// up to reassociation of the accumulation order.
struct Ops {
    const char* name;
    // sum_i x[i] * y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
};

// Always available reference implementation.
const Ops& scalar_ops();

// Returns nullptr when the build or the CPU lacks AVX2+FMA.
const Ops* avx2_ops();

// Returns nullptr when the build lacks NEON.
const Ops* neon_ops();

// Implementation selected at process start: best available backend,
// overridable with SQGSTEADY_SIMD=scalar|avx2|neon. Requesting an
// unavailable backend throws config_error.
const Ops& active();

} // namespace sqgsteady::simd
