#pragma once

#include "racah/rational.hpp"

#include <cstdint>
#include <random>

namespace racah {

/// Deterministic random source. All derived draws go through next(), so a
/// seed fixes the entire stream independent of platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    long int_in(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    Rat rational(long max_num, long max_den) {
        return Rat(int_in(-max_num, max_num), int_in(1, max_den));
    }

    Rat nonzero_rational(long max_num, long max_den) {
        for (;;) {
            Rat r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

private:
    std::mt19937_64 g_;
};

} // namespace racah
