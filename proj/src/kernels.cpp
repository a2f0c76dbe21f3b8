#include <atomic>
#include <cstdlib>

#include "wgauss/kernels.hpp"

namespace wgauss::kern {

bool avx2::supported() { return __builtin_cpu_supports("avx2"); }

namespace {

bool detect() {
    if (const char* env = std::getenv("WGAUSS_FORCE_SCALAR"); env && *env && *env != '0')
        return false;
    return avx2::supported();
}

std::atomic<bool> use_avx2{detect()};

}  // namespace

bool avx2_active() { return use_avx2.load(std::memory_order_relaxed); }

void force_scalar(bool on) { use_avx2.store(on ? false : detect(), std::memory_order_relaxed); }

void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n, uint32_t p) {
    if (avx2_active())
        avx2::axpy_mod(y, x, a, n, p);
    else
        scalar::axpy_mod(y, x, a, n, p);
}

void horner_mod(const uint32_t* c, std::size_t m, const uint32_t* xs, uint32_t* out,
                std::size_t n, uint32_t p) {
    if (avx2_active())
        avx2::horner_mod(c, m, xs, out, n, p);
    else
        scalar::horner_mod(c, m, xs, out, n, p);
}

void pow_mod(const uint32_t* xs, uint32_t* out, std::size_t n, uint64_t e, uint32_t p) {
    if (avx2_active())
        avx2::pow_mod(xs, out, n, e, p);
    else
        scalar::pow_mod(xs, out, n, e, p);
}

}  // namespace wgauss::kern
