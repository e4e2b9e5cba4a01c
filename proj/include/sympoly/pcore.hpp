#pragma once

#include "sympoly/rational.hpp"

#include <span>
#include <stdexcept>

namespace sympoly {

inline constexpr std::size_t kDefaultSubsetCap = 22;

/// Raised when subset enumeration would exceed the configured variable cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// P_n(x) = sum over nonempty subsets S of (-1)^{|S|+1} (sum_{j in S} x_j)^n.
/// Enumerates all 2^m - 1 subsets in Gray-code order, so m is capped.
Rational eval_P(unsigned long n, std::span<const Rational> x, std::size_t max_vars = kDefaultSubsetCap);

/// P_n via the reduction to the tuple with the last coordinate removed:
///   P_n(x^m) = -sum_{k=1}^{n-1} C(n,k) x_m^{n-k} P_k(x^{m-1}),  P_k(x^1) = x_1^k.
/// Runs in O(m n^2) and has no cap.
Rational eval_P_recursive(unsigned long n, std::span<const Rational> x);

}  // namespace sympoly
