#ifndef PROJDECOMP_RANDOM_HPP
#define PROJDECOMP_RANDOM_HPP

#include <cstdint>
#include <random>

namespace projdecomp {

/// Seeded generator with a portable output stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The distributions in <random> are not, so the mappings to
/// doubles and bounded integers are done here: doubles take the top 53 bits
/// of one draw, integers use rejection sampling on a power-of-two mask.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            const std::uint64_t draw = engine_() & mask;
            if (draw < n) {
                return draw;
            }
        }
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace projdecomp

#endif
