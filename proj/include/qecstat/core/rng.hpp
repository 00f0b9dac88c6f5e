#pragma once

#include <cstdint>

namespace qecstat {

// Counter-based splittable PRNG (splitmix64 finalizer over key + counter).
// Streams are derived by hashing, so any (seed, stream path, counter) tuple
// maps to the same value on every platform and thread schedule.
struct CounterRng {
    static constexpr const char* kAlgorithmId = "splitmix64-ctr/v1";
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    std::uint64_t key = 0;
    std::uint64_t counter = 0;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static CounterRng from_seed(std::uint64_t seed) {
        return CounterRng{mix(seed ^ 0x6A09E667F3BCC909ull), 0};
    }

    CounterRng split(std::uint64_t stream) const {
        return CounterRng{mix(key ^ mix(stream + kGolden)), 0};
    }

    std::uint64_t next_u64() { return mix(key + kGolden * ++counter); }

    // value at an explicit counter without advancing state (kernel use)
    std::uint64_t at(std::uint64_t c) const { return mix(key + kGolden * (c + 1)); }

    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }  // [0,1)
    double next_open() {                                                    // (0,1)
        double u;
        do { u = next_double(); } while (u == 0.0);
        return u;
    }

    static double to_double(std::uint64_t v) { return double(v >> 11) * 0x1.0p-53; }

    // unbiased integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t x, r;
        do {
            x = next_u64();
            r = x % n;
        } while (x - r > std::uint64_t(0) - n);
        return r;
    }
};

}  // namespace qecstat
