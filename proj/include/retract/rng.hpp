#pragma once

#include <cstdint>
#include <random>

namespace retract {

// Portable draws on top of mt19937_64; std distributions differ between
// standard libraries and would break seed reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    bool chance(int percent) { return static_cast<int>(below(100)) < percent; }

private:
    std::mt19937_64 engine_;
};

}  // namespace retract
