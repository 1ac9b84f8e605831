// NEON kernel variants, compiled on aarch64 only (NEON is baseline there).

#include "fls/kernels.hpp"

#include <arm_neon.h>
#include <cmath>

namespace fls::kernels::detail {

namespace {

double neon_dot(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    if (i + 2 <= n) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        i += 2;
    }
    double s = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void neon_axpy(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vy = vld1q_f64(y + i);
        vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
        vst1q_f64(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

double neon_abs_dot(const double* w, const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vfmaq_f64(acc, vabsq_f64(vld1q_f64(w + i)), vld1q_f64(x + i));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += std::fabs(w[i]) * x[i];
    return s;
}

double neon_abs_sum(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(a + i)));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

double neon_inf_norm(const double* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(a + i)));
    }
    double m = vmaxvq_f64(acc);
    for (; i < n; ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

double neon_inf_norm_diff(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vmaxq_f64(acc, vabsq_f64(d));
    }
    double m = vmaxvq_f64(acc);
    for (; i < n; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

}  // namespace

extern const KernelTable neon_table;
const KernelTable neon_table = {
    neon_dot, neon_axpy, neon_abs_dot,
    neon_abs_sum, neon_inf_norm, neon_inf_norm_diff,
};

}  // namespace fls::kernels::detail
