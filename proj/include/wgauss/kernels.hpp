#pragma once

#include <cstddef>
#include <cstdint>

// Vector kernels over a prime field F_p, 2 < p < 2^31.
// Every kernel has a portable scalar reference and an AVX2 variant; the
// dispatching entry points pick one at startup.
namespace wgauss::kern {

// y[i] = (y[i] + a * x[i]) mod p
void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n, uint32_t p);

// out[i] = c[0] + c[1] xs[i] + ... + c[m-1] xs[i]^(m-1) mod p
void horner_mod(const uint32_t* c, std::size_t m, const uint32_t* xs, uint32_t* out,
                std::size_t n, uint32_t p);

// out[i] = xs[i]^e mod p
void pow_mod(const uint32_t* xs, uint32_t* out, std::size_t n, uint64_t e, uint32_t p);

bool avx2_active();
// Forces the scalar path (testing and benchmarking).
void force_scalar(bool on);

namespace scalar {
void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n, uint32_t p);
void horner_mod(const uint32_t* c, std::size_t m, const uint32_t* xs, uint32_t* out,
                std::size_t n, uint32_t p);
void pow_mod(const uint32_t* xs, uint32_t* out, std::size_t n, uint64_t e, uint32_t p);
}  // namespace scalar

namespace avx2 {
bool supported();
void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n, uint32_t p);
void horner_mod(const uint32_t* c, std::size_t m, const uint32_t* xs, uint32_t* out,
                std::size_t n, uint32_t p);
void pow_mod(const uint32_t* xs, uint32_t* out, std::size_t n, uint64_t e, uint32_t p);
}  // namespace avx2

}  // namespace wgauss::kern
