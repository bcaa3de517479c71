#include "nbfi/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace nbfi::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

std::atomic<int> g_forced{-1};  // -1 auto, else Isa

Isa detect() {
    if (const char* env = std::getenv("NBFI_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return Isa::avx2;
    }
    return avx2_available() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() {
    const int forced = g_forced.load(std::memory_order_relaxed);
    if (forced >= 0) return static_cast<Isa>(forced);
    static const Isa detected = detect();
    return detected;
}

void force_isa(Isa isa) { g_forced.store(static_cast<int>(isa), std::memory_order_relaxed); }

void reset_isa() { g_forced.store(-1, std::memory_order_relaxed); }

double piece_sum(const double* w, const double* x, const double* y, std::size_t n,
                 const Quad* a, const Quad* b) {
    if (active_isa() == Isa::avx2) return piece_sum_avx2(w, x, y, n, a, b);
    return piece_sum_scalar(w, x, y, n, a, b);
}

}  // namespace nbfi::kernels
