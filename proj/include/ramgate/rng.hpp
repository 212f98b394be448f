#pragma once

#include <cstdint>
#include <random>

namespace ramgate {

// Thin wrapper over mt19937_64 with an explicit double mapping, so traces
// are bit-identical across standard libraries (uniform_real_distribution is
// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection sampling keeps the draw unbiased.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

// splitmix64 finalizer; used to derive independent per-point streams from a
// base seed so parallel sweeps are schedule-independent.
std::uint64_t split_seed(std::uint64_t base, std::uint64_t index);

}  // namespace ramgate
