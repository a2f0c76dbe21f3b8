// Built with -mavx2; only reached through the dispatcher after a CPU check.
#include <immintrin.h>

#include "wgauss/kernels.hpp"

namespace wgauss::kern::avx2 {
namespace {

// Montgomery arithmetic with R = 2^32. Lanes hold values in [0, p).
struct Mont {
    uint32_t p;
    uint32_t pinv;  // -p^{-1} mod 2^32
    uint32_t r1;    // R mod p
    uint32_t r2;    // R^2 mod p

    explicit Mont(uint32_t p_) : p(p_) {
        uint32_t inv = p;
        for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
        pinv = 0u - inv;
        r1 = static_cast<uint32_t>((uint64_t{1} << 32) % p);
        r2 = static_cast<uint32_t>(static_cast<uint64_t>(r1) * r1 % p);
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        uint64_t t = static_cast<uint64_t>(a) * b;
        uint32_t m = static_cast<uint32_t>(t) * pinv;
        uint32_t u = static_cast<uint32_t>((t + static_cast<uint64_t>(m) * p) >> 32);
        return u >= p ? u - p : u;
    }
};

inline __m256i reduce_once(__m256i u, __m256i vp) {
    return _mm256_min_epu32(u, _mm256_sub_epi32(u, vp));
}

inline __m256i mont_half(__m256i t, __m256i vpinv, __m256i vp) {
    __m256i m = _mm256_mul_epu32(t, vpinv);
    __m256i mp = _mm256_mul_epu32(m, vp);
    return _mm256_srli_epi64(_mm256_add_epi64(t, mp), 32);
}

inline __m256i mont_mul(__m256i a, __m256i b, __m256i vpinv, __m256i vp) {
    __m256i even = mont_half(_mm256_mul_epu32(a, b), vpinv, vp);
    __m256i odd = mont_half(_mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32)),
                            vpinv, vp);
    __m256i r = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
    return reduce_once(r, vp);
}

inline __m256i add_mod(__m256i a, __m256i b, __m256i vp) {
    return reduce_once(_mm256_add_epi32(a, b), vp);
}

}  // namespace

void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n, uint32_t p) {
    Mont M(p);
    uint32_t ar = M.mul(a % p, M.r2);
    __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    __m256i vpinv = _mm256_set1_epi32(static_cast<int>(M.pinv));
    __m256i va = _mm256_set1_epi32(static_cast<int>(ar));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        vy = add_mod(vy, mont_mul(va, vx, vpinv, vp), vp);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), vy);
    }
    for (; i < n; ++i) {
        uint32_t s = y[i] + M.mul(ar, x[i]);
        y[i] = s >= p ? s - p : s;
    }
}

void horner_mod(const uint32_t* c, std::size_t m, const uint32_t* xs, uint32_t* out,
                std::size_t n, uint32_t p) {
    Mont M(p);
    __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    __m256i vpinv = _mm256_set1_epi32(static_cast<int>(M.pinv));
    __m256i vr2 = _mm256_set1_epi32(static_cast<int>(M.r2));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + i));
        __m256i xr = mont_mul(vx, vr2, vpinv, vp);
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t j = m; j-- > 0;) {
            acc = mont_mul(acc, xr, vpinv, vp);
            acc = add_mod(acc, _mm256_set1_epi32(static_cast<int>(c[j])), vp);
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
    }
    for (; i < n; ++i) {
        uint32_t xr = M.mul(xs[i], M.r2), acc = 0;
        for (std::size_t j = m; j-- > 0;) {
            uint32_t s = M.mul(acc, xr) + c[j];
            acc = s >= p ? s - p : s;
        }
        out[i] = acc;
    }
}

void pow_mod(const uint32_t* xs, uint32_t* out, std::size_t n, uint64_t e, uint32_t p) {
    Mont M(p);
    __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    __m256i vpinv = _mm256_set1_epi32(static_cast<int>(M.pinv));
    __m256i vr2 = _mm256_set1_epi32(static_cast<int>(M.r2));
    __m256i one = _mm256_set1_epi32(1);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + i));
        __m256i b = mont_mul(vx, vr2, vpinv, vp);
        __m256i r = _mm256_set1_epi32(static_cast<int>(M.r1));
        for (uint64_t k = e; k; k >>= 1) {
            if (k & 1) r = mont_mul(r, b, vpinv, vp);
            b = mont_mul(b, b, vpinv, vp);
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), mont_mul(r, one, vpinv, vp));
    }
    for (; i < n; ++i) {
        uint32_t b = M.mul(xs[i], M.r2), r = M.r1;
        for (uint64_t k = e; k; k >>= 1) {
            if (k & 1) r = M.mul(r, b);
            b = M.mul(b, b);
        }
        out[i] = M.mul(r, 1);
    }
}

}  // namespace wgauss::kern::avx2
