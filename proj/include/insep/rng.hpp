#ifndef INSEP_RNG_HPP
#define INSEP_RNG_HPP

#include <cstdint>

namespace insep {

// SplitMix64: tiny, portable, deterministic across platforms.  Used for all
// seeded randomness so that reports are reproducible bit for bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, n); modulo bias is irrelevant at these sizes.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Deterministic per-trial derivation from (seed, trial index).
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        Rng mix(seed ^ (0xA0761D6478BD642FULL * (trial + 1)));
        return Rng(mix.next());
    }

private:
    std::uint64_t state_;
};

}  // namespace insep

#endif
