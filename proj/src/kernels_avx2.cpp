// AVX2 kernel variants. Compiled with -mavx2 only; callers reach this file
// through the runtime dispatch table after __builtin_cpu_supports("avx2").

#include <complex>
#include <cstddef>
#include <cmath>

#include <immintrin.h>

namespace cyclomat::kernels::avx2 {

void axpy(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d yv = _mm256_loadu_pd(y + i);
        yv = _mm256_add_pd(yv, _mm256_mul_pd(av, xv));
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

// Complex values are interleaved [re, im]; one vector holds two of them.
void axpy(std::complex<double> a, const std::complex<double>* x,
          std::complex<double>* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        __m256d re = _mm256_mul_pd(xv, ar);
        __m256d sw = _mm256_permute_pd(xv, 0x5);   // swap re/im in each pair
        __m256d im = _mm256_mul_pd(sw, ai);
        yv = _mm256_add_pd(yv, _mm256_addsub_pd(re, im));
        _mm256_storeu_pd(yp + 2 * i, yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

namespace {

inline double horizontal_max(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d m = _mm_max_pd(lo, hi);
    m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
    return _mm_cvtsd_f64(m);
}

const __m256d kAbsMask =
    _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

} // namespace

double max_abs_diff(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_max_pd(acc, _mm256_and_pd(d, kAbsMask));
    }
    double m = horizontal_max(acc);
    for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

double max_abs_diff(const std::complex<double>* x,
                    const std::complex<double>* y, std::size_t n) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();   // squared moduli
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(xp + 2 * i),
                                  _mm256_loadu_pd(yp + 2 * i));
        __m256d sq = _mm256_mul_pd(d, d);
        acc = _mm256_max_pd(acc, _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5)));
    }
    double m = std::sqrt(horizontal_max(acc));
    for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

} // namespace cyclomat::kernels::avx2
