#pragma once

#include <cstdint>

#include "twisthom/matrix.hpp"

// Deterministic generator for property-style tests; seeds are fixed per test
// so failures reproduce.
namespace testutil {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return s_;
    }
    // uniform in [lo, hi] inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int num, int den) { return range(0, den - 1) < num; }

    twisthom::IntMatrix matrix(std::size_t r, std::size_t c, long long lo = -4, long long hi = 4) {
        twisthom::IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = range(lo, hi);
        return m;
    }

    twisthom::IntMatrix unimodular(std::size_t n) {
        auto u = twisthom::IntMatrix::identity(n);
        for (std::size_t k = 0; k < 2 * n; ++k) {
            std::size_t i = next() % n, j = next() % n;
            if (i == j) continue;
            u.add_row(i, j, twisthom::Integer(range(-2, 2)));
        }
        return u;
    }

private:
    std::uint64_t s_;
};

}  // namespace testutil
