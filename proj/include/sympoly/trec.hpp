#pragma once

// T_r: the normalized cofactor of P_{r+m},
//   P_{r+m}(x) = (-1)^{m+1} (r+m)!/r! * chi_m * T_r(x),   chi_m = prod_j x_j,
// as a point evaluator (two independent routes) and as an exact polynomial
// in the power sums recovered by interpolation.

#include "sympoly/rational.hpp"
#include "sympoly/symfunc.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

namespace sympoly {

inline constexpr std::uint64_t kDefaultSeed = 42;

using PointEvaluator = std::function<Rational(std::span<const Rational>)>;

/// T_r from P_{r+m} divided by its known prefactor. Every x_j must be
/// nonzero (throws std::domain_error otherwise).
Rational eval_T_via_P(unsigned long r, std::span<const Rational> x);

/// T_r = r! * sum over compositions (k_1..k_m), k_j >= 1, sum k_j = r+m, of
/// prod_j x_j^{k_j-1}/k_j!. Defined everywhere, including zero coordinates.
Rational eval_T_direct(unsigned long r, std::span<const Rational> x);

struct InterpolationOptions {
    /// Number of variables per sample point; 0 means max(w, 1), the
    /// smallest count for which E_1..E_w are algebraically independent.
    std::size_t num_vars = 0;
    std::size_t held_out = 5;
    int max_attempts = 4;
    long coord_max = 10000;
};

class InterpolationError : public std::runtime_error {
public:
    InterpolationError(const std::string& what, PointTuple witness = {})
        : std::runtime_error(what), witness_(std::move(witness)) {}
    const PointTuple& witness() const { return witness_; }

private:
    PointTuple witness_;
};

/// Recovers the unique weight-w polynomial q in the power sums with
/// q(E(x)) = evaluate(x). Solves the p(w) x p(w) system exactly from seeded
/// integer sample points, then confirms on held-out points.
PowerSumPoly interpolate_powersum(const PointEvaluator& evaluate, int w, std::uint64_t seed,
                                  const InterpolationOptions& options = {});

PowerSumPoly compute_T_poly(int r, std::uint64_t seed = kDefaultSeed);

}  // namespace sympoly
