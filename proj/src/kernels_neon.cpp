// NEON kernel variants for aarch64, where 128-bit SIMD is baseline.

#include <complex>
#include <cstddef>
#include <cmath>

#include <arm_neon.h>

namespace cyclomat::kernels::neon {

void axpy(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t xv = vld1q_f64(x + i);
        float64x2_t yv = vld1q_f64(y + i);
        vst1q_f64(y + i, vfmaq_f64(yv, av, xv));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void axpy(std::complex<double> a, const std::complex<double>* x,
          std::complex<double>* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const float64x2_t ar = vdupq_n_f64(a.real());
    const float64x2_t ai = vdupq_n_f64(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        // de-interleaved planes: v.val[0] = re parts, v.val[1] = im parts
        float64x2x2_t xv = vld2q_f64(xp + 2 * i);
        float64x2x2_t yv = vld2q_f64(yp + 2 * i);
        float64x2_t re = vsubq_f64(vmulq_f64(xv.val[0], ar), vmulq_f64(xv.val[1], ai));
        float64x2_t im = vaddq_f64(vmulq_f64(xv.val[0], ai), vmulq_f64(xv.val[1], ar));
        yv.val[0] = vaddq_f64(yv.val[0], re);
        yv.val[1] = vaddq_f64(yv.val[1], im);
        vst2q_f64(yp + 2 * i, yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

double max_abs_diff(const double* x, const double* y, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i));
        acc = vmaxq_f64(acc, vabsq_f64(d));
    }
    double m = vmaxvq_f64(acc);
    for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

double max_abs_diff(const std::complex<double>* x,
                    const std::complex<double>* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    float64x2_t acc = vdupq_n_f64(0.0);   // squared moduli
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t xv = vld2q_f64(xp + 2 * i);
        float64x2x2_t yv = vld2q_f64(yp + 2 * i);
        float64x2_t dr = vsubq_f64(xv.val[0], yv.val[0]);
        float64x2_t di = vsubq_f64(xv.val[1], yv.val[1]);
        acc = vmaxq_f64(acc, vaddq_f64(vmulq_f64(dr, dr), vmulq_f64(di, di)));
    }
    double m = std::sqrt(vmaxvq_f64(acc));
    for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

} // namespace cyclomat::kernels::neon
