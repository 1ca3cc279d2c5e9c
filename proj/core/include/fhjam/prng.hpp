#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace fhjam {

/// Seeded hop-draw generator. std::mt19937_64 produces an identical stream
/// for a given seed on every conforming platform, and the bounded draw uses
/// rejection sampling, so (seed, draw sequence) is fully portable.
class HopPrng {
public:
    explicit HopPrng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform draw in [0, n). Rejects raw values whose bucket of n
    /// consecutive values is truncated at the top of the 64-bit range.
    std::uint64_t draw_below(std::uint64_t n) {
        if (n == 0) {
            throw std::logic_error("HopPrng::draw_below: empty range");
        }
        for (;;) {
            const std::uint64_t x = engine_();
            const std::uint64_t r = x % n;
            if (x - r <= std::uint64_t{0} - n) {
                return r;
            }
        }
    }

    friend bool operator==(const HopPrng& a, const HopPrng& b) {
        return a.engine_ == b.engine_;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace fhjam
