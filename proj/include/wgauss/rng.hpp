#pragma once

#include <cstdint>
#include <random>

namespace wgauss {

// mt19937_64 is fully specified by the standard; the bounded draw below is
// done by hand because std::uniform_int_distribution differs between
// standard libraries and reports must be bit-identical.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform in [0, n), n > 0.
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do v = eng_();
        while (v >= limit);
        return v % n;
    }

    bool coin() { return eng_() >> 63; }

    // Child stream for trial i; independent of how trials are scheduled.
    static uint64_t derive(uint64_t seed, uint64_t i) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace wgauss
