#pragma once

#include <cstddef>
#include <cstdint>

// Float-array reduction and blend primitives behind the loss kernels. Each
// op has a scalar reference implementation and an AVX2 variant; dispatch
// picks one at load time from CPUID (override with PHYSLAB_KERNELS=scalar).
// All reductions accumulate in double so the two lanes agree to ~1e-12
// relative and results are deterministic for a fixed lane.
namespace physlab::kernels {

struct Ops {
    double (*sum)(const float* a, size_t n);
    double (*dot)(const float* a, const float* b, size_t n);
    double (*sum_sq)(const float* a, size_t n);
    // sum((a-b)^2)
    double (*sq_diff_sum)(const float* a, const float* b, size_t n);
    // sum(|a-b|)
    double (*abs_diff_sum)(const float* a, const float* b, size_t n);
    // sum(|(a2-a1)-(b2-b1)|), the shared form of spatial/temporal gradient losses
    double (*diff_l1_sum)(const float* a2, const float* a1, const float* b2, const float* b1,
                          size_t n);
    // sum(max(0, |a-b| - m))
    double (*hinge_abs_sum)(const float* a, const float* b, float m, size_t n);
    // y += alpha * x
    void (*axpy)(float alpha, const float* x, float* y, size_t n);
    // dst = sum_k w[k] * src[k]  (8 corners, trilinear gather blend)
    void (*blend8)(float* dst, const float* const src[8], const float w[8], size_t n);
    const char* name;
};

namespace scalar {
extern const Ops ops;
}
namespace avx2 {
// Null ops (name == nullptr entries never happen; `available` is false) when
// the binary was built without AVX2 support.
extern const Ops ops;
extern const bool available;
}

// Active dispatch table. Resolved once on first use.
const Ops& active();

// Convenience forwarders.
inline double sum(const float* a, size_t n) { return active().sum(a, n); }
inline double dot(const float* a, const float* b, size_t n) { return active().dot(a, b, n); }
inline double sum_sq(const float* a, size_t n) { return active().sum_sq(a, n); }
inline double sq_diff_sum(const float* a, const float* b, size_t n) {
    return active().sq_diff_sum(a, b, n);
}
inline double abs_diff_sum(const float* a, const float* b, size_t n) {
    return active().abs_diff_sum(a, b, n);
}
inline double diff_l1_sum(const float* a2, const float* a1, const float* b2, const float* b1,
                          size_t n) {
    return active().diff_l1_sum(a2, a1, b2, b1, n);
}
inline double hinge_abs_sum(const float* a, const float* b, float m, size_t n) {
    return active().hinge_abs_sum(a, b, m, n);
}
inline void axpy(float alpha, const float* x, float* y, size_t n) {
    active().axpy(alpha, x, y, n);
}
inline void blend8(float* dst, const float* const src[8], const float w[8], size_t n) {
    active().blend8(dst, src, w, n);
}

}  // namespace physlab::kernels
