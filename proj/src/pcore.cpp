#include "sympoly/pcore.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace sympoly {

namespace {

void check_args(unsigned long n, std::span<const Rational> x) {
    if (n < 1) throw std::invalid_argument("P_n requires n >= 1");
    if (x.empty()) throw std::invalid_argument("P_n requires at least one coordinate");
}

}  // namespace

Rational eval_P(unsigned long n, std::span<const Rational> x, std::size_t max_vars) {
    check_args(n, x);
    if (x.size() > max_vars)
        throw CapacityError("subset enumeration over " + std::to_string(x.size()) + " variables exceeds cap of " +
                            std::to_string(max_vars));

    const std::uint64_t count = std::uint64_t{1} << x.size();
    Rational subset_sum = 0;
    Rational out = 0;
    std::uint64_t previous = 0;
    for (std::uint64_t i = 1; i < count; ++i) {
        const std::uint64_t gray = i ^ (i >> 1);
        const std::uint64_t flipped = gray ^ previous;
        const auto j = static_cast<std::size_t>(std::countr_zero(flipped));
        if (gray & flipped)
            subset_sum += x[j];
        else
            subset_sum -= x[j];
        previous = gray;
        Rational term = pow(subset_sum, n);
        if (std::popcount(gray) % 2 == 1)
            out += term;
        else
            out -= term;
    }
    return out;
}

Rational eval_P_recursive(unsigned long n, std::span<const Rational> x) {
    check_args(n, x);
    // level[k] = P_k of the current prefix, k = 1..n
    std::vector<Rational> level(n + 1);
    for (unsigned long k = 1; k <= n; ++k) level[k] = pow(x[0], k);

    std::vector<Rational> next(n + 1);
    for (std::size_t j = 1; j < x.size(); ++j) {
        std::vector<Rational> powers(n + 1);
        powers[0] = 1;
        for (unsigned long k = 1; k <= n; ++k) powers[k] = powers[k - 1] * x[j];
        for (unsigned long target = 1; target <= n; ++target) {
            Rational acc = 0;
            for (unsigned long k = 1; k < target; ++k)
                acc += Rational(binomial(target, static_cast<long>(k))) * powers[target - k] * level[k];
            next[target] = -acc;
        }
        level.swap(next);
    }
    return level[n];
}

}  // namespace sympoly
