#include "physlab/kernels/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace physlab::kernels {

namespace {

const Ops& resolve() {
    const char* force = std::getenv("PHYSLAB_KERNELS");
    if (force && std::strcmp(force, "scalar") == 0) return scalar::ops;
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2::available && __builtin_cpu_supports("avx2") && (!force || std::strcmp(force, "avx2") == 0))
        return avx2::ops;
#endif
    return scalar::ops;
}

}  // namespace

const Ops& active() {
    static const Ops& ops = resolve();
    return ops;
}

}  // namespace physlab::kernels
