#pragma once

#include <cstdint>

namespace cyclesep {

// SplitMix64. Self-contained so that seeded runs are byte-identical across
// platforms and standard library versions (std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    double unit_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Independent stream for subtask `tag` of the run seeded with `seed`.
    static Rng fork(std::uint64_t seed, std::uint64_t tag) {
        Rng mixer(seed ^ (0x632be59bd9b4e019ULL * (tag + 1)));
        return Rng(mixer.next_u64());
    }

private:
    std::uint64_t state_;
};

} // namespace cyclesep
