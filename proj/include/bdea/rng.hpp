#pragma once

#include <cstdint>

namespace bdea {

// xorshift64* — deterministic, portable, NOT cryptographically secure.
// Used for the key-wrapping stream and for seeded test/bench randomness.
class XorShift64Star {
public:
    explicit XorShift64Star(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    // Uniform-ish value in [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

}  // namespace bdea
