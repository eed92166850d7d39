#include "physlab/kernels/kernels.hpp"

#include <cmath>

namespace physlab::kernels::scalar {

namespace {

double sum_impl(const float* a, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += static_cast<double>(a[i]);
    return acc;
}

double dot_impl(const float* a, const float* b, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

double sum_sq_impl(const float* a, size_t n) { return dot_impl(a, a, n); }

double sq_diff_sum_impl(const float* a, const float* b, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        acc += d * d;
    }
    return acc;
}

double abs_diff_sum_impl(const float* a, const float* b, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i)
        acc += std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i]));
    return acc;
}

double diff_l1_sum_impl(const float* a2, const float* a1, const float* b2, const float* b1,
                        size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double da = static_cast<double>(a2[i]) - static_cast<double>(a1[i]);
        double db = static_cast<double>(b2[i]) - static_cast<double>(b1[i]);
        acc += std::abs(da - db);
    }
    return acc;
}

double hinge_abs_sum_impl(const float* a, const float* b, float m, size_t n) {
    double acc = 0.0;
    double dm = static_cast<double>(m);
    for (size_t i = 0; i < n; ++i) {
        double d = std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i])) - dm;
        if (d > 0.0) acc += d;
    }
    return acc;
}

void axpy_impl(float alpha, const float* x, float* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void blend8_impl(float* dst, const float* const src[8], const float w[8], size_t n) {
    for (size_t i = 0; i < n; ++i) {
        float acc = 0.0f;
        for (int k = 0; k < 8; ++k) acc += w[k] * src[k][i];
        dst[i] = acc;
    }
}

}  // namespace

const Ops ops = {
    sum_impl,     dot_impl,         sum_sq_impl, sq_diff_sum_impl, abs_diff_sum_impl,
    diff_l1_sum_impl, hinge_abs_sum_impl, axpy_impl,   blend8_impl,      "scalar",
};

}  // namespace physlab::kernels::scalar
