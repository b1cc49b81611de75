#include "sqgsteady/simd/kernels.hpp"

namespace sqgsteady::simd {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    // Four independent accumulators: keeps the result bit-compatible
    // with the 4-lane vector backends' reduction order.
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += x[i] * y[i];
        s1 += x[i + 1] * y[i + 1];
        s2 += x[i + 2] * y[i + 2];
        s3 += x[i + 3] * y[i + 3];
    }
    double tail = 0.0;
    for (; i < n; ++i) tail += x[i] * y[i];
    return ((s0 + s1) + (s2 + s3)) + tail;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", &dot_scalar, &axpy_scalar};
    return ops;
}

} // namespace sqgsteady::simd
