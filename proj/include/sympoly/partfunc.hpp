#pragma once

// Partition-function side: the umbral Bernoulli coefficients f_r, the
// polynomial part W_1 of the denumerant, a brute-force denumerant, and the
// checks tying them together.

#include "sympoly/rational.hpp"
#include "sympoly/report.hpp"
#include "sympoly/symfunc.hpp"
#include "sympoly/trec.hpp"

#include <span>
#include <vector>

namespace sympoly {

/// f_r(d) = (sigma_1 + sum_i B d_i)^r with an independent umbra per d_i:
/// after multinomial expansion each (B d_i)^j becomes B_j d_i^j.
Rational eval_f(unsigned long r, std::span<const Rational> d);

/// [f_0, ..., f_max_r] at d, sharing one expansion.
std::vector<Rational> eval_f_upto(unsigned long max_r, std::span<const Rational> d);

PowerSumPoly compute_f_poly(int r, std::uint64_t seed = kDefaultSeed);

/// W_1(s, d) = 1/((m-1)! pi_m) sum_{r=0}^{m-1} C(m-1,r) f_r(d) s^{m-1-r}.
/// s may be any rational; every d_i must be a positive integer
/// (std::domain_error otherwise).
Rational eval_W1(const Rational& s, std::span<const Rational> d);

/// Number of nonnegative integer solutions of sum_i t_i d_i = s.
BigInt count_partitions_brute(unsigned long s, std::span<const Rational> d);

/// W_1(s - sigma_1/2) = (-1)^{m+1} W_1(-s - sigma_1/2) for each s.
VerificationReport check_parity(std::span<const Rational> d, std::span<const Rational> s_values);

/// W_1(s, d^m) - W_1(s - d_m, d^m) = W_1(s, d^{m-1}) for each s (m >= 2).
VerificationReport check_recursion(std::span<const Rational> d, std::span<const Rational> s_values);

struct ProximityProfile {
    BigInt period;                  // lcm(d)
    std::vector<Rational> block_max;  // max |W - W_1| per block of length period
    Rational bound;                 // max over all blocks
    bool stable = false;            // every block attains the same maximum
};

/// Samples s over [0, blocks * lcm(d)) and tracks |W(s) - W_1(s)| per block.
ProximityProfile proximity_profile(std::span<const Rational> d, unsigned blocks = 3);

/// Report form of proximity_profile: passes when the block maxima agree.
VerificationReport check_proximity(std::span<const Rational> d, unsigned blocks = 3);

/// d = (1, ..., 1): W_1(s) = C(s+m-1, m-1) = W(s) for s in [0, max_s].
VerificationReport check_unit_generators(unsigned m, unsigned long max_s);

}  // namespace sympoly
