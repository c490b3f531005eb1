#pragma once
// SplitMix64 with explicit bounded draws. std:: distributions are
// implementation-defined, which would break byte-for-byte reproducibility of
// seeded runs, so sampling is pinned down here.

#include <cstdint>

namespace galedeg {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, bound); the modulo bias is irrelevant here and the
    // mapping is stable across platforms, which is what matters.
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace galedeg
