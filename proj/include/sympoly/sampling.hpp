#pragma once

#include "sympoly/rational.hpp"

#include <cstdint>
#include <random>

namespace sympoly {

/// Seeded source of sample points. Uses mt19937_64 with plain modulo
/// reduction so a given seed yields the same points on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    /// Coordinates drawn from [lo, hi] as integers.
    PointTuple integer_point(std::size_t m, long lo, long hi) {
        PointTuple out;
        out.reserve(m);
        for (std::size_t j = 0; j < m; ++j) out.emplace_back(integer(lo, hi));
        return out;
    }

    /// num/den with num in [lo, hi] and den in [1, max_den].
    Rational rational(long lo, long hi, long max_den) {
        const long num = integer(lo, hi);
        const long den = integer(1, max_den);
        return make_rational(num, den);
    }

    PointTuple rational_point(std::size_t m, long lo, long hi, long max_den) {
        PointTuple out;
        out.reserve(m);
        for (std::size_t j = 0; j < m; ++j) out.push_back(rational(lo, hi, max_den));
        return out;
    }

    /// Nonzero rational coordinates.
    PointTuple nonzero_point(std::size_t m, long bound, long max_den) {
        PointTuple out;
        out.reserve(m);
        while (out.size() < m) {
            Rational q = rational(-bound, bound, max_den);
            if (q != 0) out.push_back(q);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace sympoly
