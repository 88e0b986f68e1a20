#pragma once

#include <cstdint>

namespace sumdilates {

// Trial streams are derived with splitmix64 so runs reproduce bit-for-bit
// anywhere. Constants (also documented in the README):
//   increment  0x9E3779B97F4A7C15
//   mix mul 1  0xBF58476D1CE4E5B9  (xor-shift 30)
//   mix mul 2  0x94D049BB133111EB  (xor-shift 27, then 31)
inline constexpr std::uint64_t kSeedIncrement = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seed of trial t within a run: mix64(run_seed + (t + 1) * increment).
inline std::uint64_t trial_seed(std::uint64_t run_seed, std::uint64_t t) {
    return mix64(run_seed + (t + 1) * kSeedIncrement);
}

/// splitmix64 stream; deterministic across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kSeedIncrement;
        return mix64(state_);
    }

    /// Uniform in [0, n); unbiased via modulo rejection.
    std::uint64_t bounded(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t threshold = (0 - n) % n;
        while (true) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace sumdilates
