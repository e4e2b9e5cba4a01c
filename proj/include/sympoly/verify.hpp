#pragma once

// Property suites over the whole library. Every suite is deterministic in
// its (seed, parameters) and returns VerificationReports instead of
// asserting, so conjectural claims are recorded rather than assumed.

#include "sympoly/identities.hpp"
#include "sympoly/report.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace sympoly {

/// compute_T_poly(r) == flip_even_signs(compute_f_poly(r)) for 2 <= r <= max_r.
VerificationReport verify_conjecture1(int max_r, std::uint64_t seed);

/// The odd-ratio relation for T at every 1 <= n <= m/2.
VerificationReport verify_conjecture2(unsigned m, std::uint64_t seed, unsigned trials);

/// Lower and upper bound on T_r / T_1^r for m variables, 2 <= r <= 7.
std::pair<Rational, Rational> ratio_bounds(int r, unsigned m);

VerificationReport verify_bounds(int max_r, unsigned m, std::uint64_t seed, unsigned trials);

/// Printed expressions of higher power sums through lower ones for m = 1, 2, 3.
VerificationReport verify_power_sum_relations(unsigned m, std::uint64_t seed, unsigned trials);

VerificationReport verify_zero_coordinate(unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials);
VerificationReport verify_e1_divisibility(unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials);
VerificationReport verify_sign_alternation(unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials);
/// P_n = 0 for n < m and P_m = (-1)^{m+1} m! chi_m.
VerificationReport verify_low_degree(unsigned max_m, std::uint64_t seed, unsigned trials);
VerificationReport verify_recursion_oracle(unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials);
VerificationReport verify_t_oracle(unsigned max_r, unsigned max_m, std::uint64_t seed, unsigned trials);

/// All of the above P_n and T_r batteries.
std::vector<VerificationReport> verify_lemmas(unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials);

/// Parity and W_1 recursion over random generator tuples with 1 <= m <= max_m.
std::vector<VerificationReport> verify_parity_suite(unsigned tuples, unsigned s_per_tuple, unsigned max_m,
                                                    std::uint64_t seed);

}  // namespace sympoly
