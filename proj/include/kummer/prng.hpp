#pragma once

// Deterministic xorshift64 stream; the only source of randomness in the
// library. The raw seed is scrambled with a splitmix64 step so that seed 0
// produces a usable nonzero state.

#include <cstdint>

namespace kummer {

class Xorshift64 {
public:
    explicit Xorshift64(uint64_t seed = 0) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        state_ = (z ^ (z >> 31)) | 1;
    }

    uint64_t next() {
        uint64_t x = state_;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return state_ = x;
    }

    // Uniform value in [0, bound); bound must be positive.
    uint64_t below(uint64_t bound) { return next() % bound; }

    long long range(long long lo, long long hi) {  // inclusive ends
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

}  // namespace kummer
