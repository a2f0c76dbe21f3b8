#include "wgauss/kernels.hpp"

namespace wgauss::kern::scalar {

void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<uint32_t>((y[i] + static_cast<uint64_t>(a) * x[i]) % p);
}

void horner_mod(const uint32_t* c, std::size_t m, const uint32_t* xs, uint32_t* out,
                std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        uint64_t acc = 0;
        for (std::size_t j = m; j-- > 0;) acc = (acc * xs[i] + c[j]) % p;
        out[i] = static_cast<uint32_t>(acc);
    }
}

void pow_mod(const uint32_t* xs, uint32_t* out, std::size_t n, uint64_t e, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        uint64_t b = xs[i] % p, r = 1 % p;
        for (uint64_t k = e; k; k >>= 1) {
            if (k & 1) r = r * b % p;
            b = b * b % p;
        }
        out[i] = static_cast<uint32_t>(r);
    }
}

}  // namespace wgauss::kern::scalar
