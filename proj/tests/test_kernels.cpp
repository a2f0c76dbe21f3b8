#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "wgauss/kernels.hpp"
#include "wgauss/rng.hpp"

using namespace wgauss;

namespace {

const uint32_t kPrimes[] = {3, 7, 10007, 65537, 1000003, 2147483629u, 2147483647u};

std::vector<uint32_t> rand_vec(Rng& rng, std::size_t n, uint32_t p) {
    std::vector<uint32_t> v(n);
    for (auto& x : v) x = static_cast<uint32_t>(rng.below(p));
    return v;
}

}  // namespace

TEST_CASE("axpy: avx2 matches scalar reference") {
    if (!kern::avx2::supported()) return;
    Rng rng(1);
    for (uint32_t p : kPrimes)
        for (std::size_t n : std::vector<std::size_t>{0, 1, 7, 8, 9, 31, 64, 257}) {
            auto x = rand_vec(rng, n, p), y = rand_vec(rng, n, p);
            uint32_t a = static_cast<uint32_t>(rng.below(p));
            auto y1 = y, y2 = y;
            kern::scalar::axpy_mod(y1.data(), x.data(), a, n, p);
            kern::avx2::axpy_mod(y2.data(), x.data(), a, n, p);
            CHECK(y1 == y2);
        }
}

TEST_CASE("horner: avx2 matches scalar reference") {
    if (!kern::avx2::supported()) return;
    Rng rng(2);
    for (uint32_t p : kPrimes)
        for (std::size_t m : std::vector<std::size_t>{0, 1, 2, 8, 13})
            for (std::size_t n : std::vector<std::size_t>{0, 5, 8, 100}) {
                auto c = rand_vec(rng, m, p), xs = rand_vec(rng, n, p);
                std::vector<uint32_t> o1(n), o2(n);
                kern::scalar::horner_mod(c.data(), m, xs.data(), o1.data(), n, p);
                kern::avx2::horner_mod(c.data(), m, xs.data(), o2.data(), n, p);
                CHECK(o1 == o2);
            }
}

TEST_CASE("pow: avx2 matches scalar reference") {
    if (!kern::avx2::supported()) return;
    Rng rng(3);
    for (uint32_t p : kPrimes)
        for (uint64_t e : std::vector<uint64_t>{0, 1, 2, 5003, uint64_t{p} - 1, 0xffffffffffull}) {
            auto xs = rand_vec(rng, 45, p);
            std::vector<uint32_t> o1(45), o2(45);
            kern::scalar::pow_mod(xs.data(), o1.data(), 45, e, p);
            kern::avx2::pow_mod(xs.data(), o2.data(), 45, e, p);
            CHECK(o1 == o2);
        }
}

TEST_CASE("pow: Fermat little theorem through the dispatcher") {
    const uint32_t p = 10007;
    std::vector<uint32_t> xs(p - 1), out(p - 1);
    for (uint32_t i = 0; i + 1 < p; ++i) xs[i] = i + 1;
    kern::pow_mod(xs.data(), out.data(), xs.size(), p - 1, p);
    for (uint32_t v : out) REQUIRE(v == 1);
}

TEST_CASE("dispatcher can be forced onto the scalar path") {
    kern::force_scalar(true);
    CHECK_FALSE(kern::avx2_active());
    uint32_t y[3] = {1, 2, 3}, x[3] = {4, 5, 6};
    kern::axpy_mod(y, x, 2, 3, 7);
    CHECK(y[0] == 2);
    CHECK(y[1] == 5);
    CHECK(y[2] == 1);
    kern::force_scalar(false);
    CHECK(kern::avx2_active() == kern::avx2::supported());
}
