// AVX2 kernel lane. Compiled with -mavx2; only reachable when CPUID reports
// AVX2 at runtime. Reductions run the elementwise arithmetic in double lanes
// (matching the scalar reference), so the lanes differ only in accumulation
// order. axpy/blend8 use mul+add in scalar order and are bit-identical to
// the reference.

#include "physlab/kernels/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <cmath>

namespace physlab::kernels::avx2 {

namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double sum_impl(const float* a, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 v = _mm256_loadu_ps(a + i);
        acc0 = _mm256_add_pd(acc0, _mm256_cvtps_pd(_mm256_castps256_ps128(v)));
        acc1 = _mm256_add_pd(acc1, _mm256_cvtps_pd(_mm256_extractf128_ps(v, 1)));
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += static_cast<double>(a[i]);
    return acc;
}

double dot_impl(const float* a, const float* b, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        __m256d a_lo = _mm256_cvtps_pd(_mm256_castps256_ps128(va));
        __m256d a_hi = _mm256_cvtps_pd(_mm256_extractf128_ps(va, 1));
        __m256d b_lo = _mm256_cvtps_pd(_mm256_castps256_ps128(vb));
        __m256d b_hi = _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1));
        acc0 = _mm256_fmadd_pd(a_lo, b_lo, acc0);
        acc1 = _mm256_fmadd_pd(a_hi, b_hi, acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

double sum_sq_impl(const float* a, size_t n) { return dot_impl(a, a, n); }

double sq_diff_sum_impl(const float* a, const float* b, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        __m256d d_lo = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(va)),
                                     _mm256_cvtps_pd(_mm256_castps256_ps128(vb)));
        __m256d d_hi = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(va, 1)),
                                     _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1)));
        acc0 = _mm256_fmadd_pd(d_lo, d_lo, acc0);
        acc1 = _mm256_fmadd_pd(d_hi, d_hi, acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        acc += d * d;
    }
    return acc;
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

double abs_diff_sum_impl(const float* a, const float* b, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        __m256d d_lo = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(va)),
                                     _mm256_cvtps_pd(_mm256_castps256_ps128(vb)));
        __m256d d_hi = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(va, 1)),
                                     _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1)));
        acc0 = _mm256_add_pd(acc0, _mm256_and_pd(d_lo, kAbsMask));
        acc1 = _mm256_add_pd(acc1, _mm256_and_pd(d_hi, kAbsMask));
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        acc += std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i]));
    return acc;
}

double diff_l1_sum_impl(const float* a2, const float* a1, const float* b2, const float* b1,
                        size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va2 = _mm256_loadu_ps(a2 + i);
        __m256 va1 = _mm256_loadu_ps(a1 + i);
        __m256 vb2 = _mm256_loadu_ps(b2 + i);
        __m256 vb1 = _mm256_loadu_ps(b1 + i);
        __m256d da_lo = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(va2)),
                                      _mm256_cvtps_pd(_mm256_castps256_ps128(va1)));
        __m256d db_lo = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(vb2)),
                                      _mm256_cvtps_pd(_mm256_castps256_ps128(vb1)));
        __m256d da_hi = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(va2, 1)),
                                      _mm256_cvtps_pd(_mm256_extractf128_ps(va1, 1)));
        __m256d db_hi = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(vb2, 1)),
                                      _mm256_cvtps_pd(_mm256_extractf128_ps(vb1, 1)));
        acc0 = _mm256_add_pd(acc0, _mm256_and_pd(_mm256_sub_pd(da_lo, db_lo), kAbsMask));
        acc1 = _mm256_add_pd(acc1, _mm256_and_pd(_mm256_sub_pd(da_hi, db_hi), kAbsMask));
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        double da = static_cast<double>(a2[i]) - static_cast<double>(a1[i]);
        double db = static_cast<double>(b2[i]) - static_cast<double>(b1[i]);
        acc += std::abs(da - db);
    }
    return acc;
}

double hinge_abs_sum_impl(const float* a, const float* b, float m, size_t n) {
    const __m256d vm = _mm256_set1_pd(static_cast<double>(m));
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        __m256d d_lo = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(va)),
                                     _mm256_cvtps_pd(_mm256_castps256_ps128(vb)));
        __m256d d_hi = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(va, 1)),
                                     _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1)));
        __m256d h_lo = _mm256_max_pd(zero, _mm256_sub_pd(_mm256_and_pd(d_lo, kAbsMask), vm));
        __m256d h_hi = _mm256_max_pd(zero, _mm256_sub_pd(_mm256_and_pd(d_hi, kAbsMask), vm));
        acc0 = _mm256_add_pd(acc0, h_lo);
        acc1 = _mm256_add_pd(acc1, h_hi);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    double dm = static_cast<double>(m);
    for (; i < n; ++i) {
        double d = std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i])) - dm;
        if (d > 0.0) acc += d;
    }
    return acc;
}

void axpy_impl(float alpha, const float* x, float* y, size_t n) {
    const __m256 va = _mm256_set1_ps(alpha);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 vy = _mm256_loadu_ps(y + i);
        // mul+add (not fma) keeps bit parity with the scalar lane
        vy = _mm256_add_ps(vy, _mm256_mul_ps(va, _mm256_loadu_ps(x + i)));
        _mm256_storeu_ps(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void blend8_impl(float* dst, const float* const src[8], const float w[8], size_t n) {
    __m256 vw[8];
    for (int k = 0; k < 8; ++k) vw[k] = _mm256_set1_ps(w[k]);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 acc = _mm256_mul_ps(vw[0], _mm256_loadu_ps(src[0] + i));
        for (int k = 1; k < 8; ++k)
            acc = _mm256_add_ps(acc, _mm256_mul_ps(vw[k], _mm256_loadu_ps(src[k] + i)));
        _mm256_storeu_ps(dst + i, acc);
    }
    for (; i < n; ++i) {
        float acc = w[0] * src[0][i];
        for (int k = 1; k < 8; ++k) acc += w[k] * src[k][i];
        dst[i] = acc;
    }
}

}  // namespace

const Ops ops = {
    sum_impl,     dot_impl,         sum_sq_impl, sq_diff_sum_impl, abs_diff_sum_impl,
    diff_l1_sum_impl, hinge_abs_sum_impl, axpy_impl,   blend8_impl,      "avx2",
};
const bool available = true;

}  // namespace physlab::kernels::avx2

#else

namespace physlab::kernels::avx2 {
const Ops ops = {};
const bool available = false;
}  // namespace physlab::kernels::avx2

#endif
