#include "sqgsteady/simd/kernels.hpp"

#if defined(__ARM_NEON)

#include <arm_neon.h>

namespace sqgsteady::simd {

namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    double s = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

} // namespace

const Ops* neon_ops() {
    static const Ops ops{"neon", &dot_neon, &axpy_neon};
    return &ops;
}

} // namespace sqgsteady::simd

#else

namespace sqgsteady::simd {
const Ops* neon_ops() { return nullptr; }
} // namespace sqgsteady::simd

#endif
