#include "sympoly/partfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympoly {

std::vector<Rational> eval_f_upto(unsigned long max_r, std::span<const Rational> d) {
    // Exponential generating function: sum_r f_r t^r/r! equals
    // exp(sigma_1 t) * prod_i sum_j B_j d_i^j t^j/j!, which is the
    // multinomial expansion with one umbra per generator.
    const std::size_t len = max_r + 1;
    std::vector<Rational> inv_fact(len);
    for (std::size_t j = 0; j < len; ++j) inv_fact[j] = Rational(1) / Rational(factorial(j));

    const Rational sigma1 = sum(d);
    std::vector<Rational> acc(len);
    {
        Rational power = 1;
        for (std::size_t j = 0; j < len; ++j) {
            acc[j] = power * inv_fact[j];
            power *= sigma1;
        }
    }

    std::vector<Rational> factor(len);
    std::vector<Rational> next(len);
    for (const auto& di : d) {
        Rational power = 1;
        for (std::size_t j = 0; j < len; ++j) {
            factor[j] = bernoulli(j) * power * inv_fact[j];
            power *= di;
        }
        for (std::size_t k = 0; k < len; ++k) {
            Rational c = 0;
            for (std::size_t j = 0; j <= k; ++j) c += acc[k - j] * factor[j];
            next[k] = c;
        }
        acc.swap(next);
    }
    for (std::size_t k = 0; k < len; ++k) acc[k] *= Rational(factorial(k));
    return acc;
}

Rational eval_f(unsigned long r, std::span<const Rational> d) { return eval_f_upto(r, d)[r]; }

PowerSumPoly compute_f_poly(int r, std::uint64_t seed) {
    if (r < 0) throw std::invalid_argument("compute_f_poly: negative r");
    const auto ur = static_cast<unsigned long>(r);
    return interpolate_powersum([ur](std::span<const Rational> d) { return eval_f(ur, d); }, r, seed);
}

namespace {

void require_generators(std::span<const Rational> d) {
    if (d.empty()) throw std::domain_error("generator tuple must be nonempty");
    for (const auto& di : d)
        if (!is_integer(di) || di <= 0)
            throw std::domain_error("generators must be positive integers, got " + to_string(di));
}

unsigned long as_ulong(const Rational& q) {
    if (!q.get_num().fits_ulong_p()) throw std::domain_error("generator too large: " + to_string(q));
    return q.get_num().get_ui();
}

}  // namespace

Rational eval_W1(const Rational& s, std::span<const Rational> d) {
    require_generators(d);
    const unsigned long m = d.size();
    const auto f = eval_f_upto(m - 1, d);
    // Horner in s over descending powers s^{m-1-r}.
    Rational acc = 0;
    for (unsigned long r = 0; r < m; ++r) acc = acc * s + Rational(binomial(m - 1, static_cast<long>(r))) * f[r];
    return acc / (Rational(factorial(m - 1)) * product(d));
}

BigInt count_partitions_brute(unsigned long s, std::span<const Rational> d) {
    require_generators(d);
    std::vector<BigInt> ways(s + 1, BigInt(0));
    ways[0] = 1;
    for (const auto& di : d) {
        const unsigned long step = as_ulong(di);
        for (unsigned long v = step; v <= s; ++v) ways[v] += ways[v - step];
    }
    return ways[s];
}

VerificationReport check_parity(std::span<const Rational> d, std::span<const Rational> s_values) {
    require_generators(d);
    VerificationReport report("parity");
    report.params()["d"] = to_string(d);
    const Rational half_sigma = sum(d) / 2;
    const bool odd_m = d.size() % 2 == 1;
    for (const auto& s : s_values) {
        const Rational lhs = eval_W1(s - half_sigma, d);
        Rational rhs = eval_W1(-s - half_sigma, d);
        if (!odd_m) rhs = -rhs;
        report.record(lhs == rhs, Json{{"d", to_string(d)}, {"s", to_string(s)}}, to_string(rhs), to_string(lhs));
    }
    return report;
}

VerificationReport check_recursion(std::span<const Rational> d, std::span<const Rational> s_values) {
    require_generators(d);
    if (d.size() < 2) throw std::domain_error("W_1 recursion needs at least two generators");
    VerificationReport report("w1.recursion");
    report.params()["d"] = to_string(d);
    const auto prefix = d.first(d.size() - 1);
    for (const auto& s : s_values) {
        const Rational lhs = eval_W1(s, d) - eval_W1(s - d.back(), d);
        const Rational rhs = eval_W1(s, prefix);
        report.record(lhs == rhs, Json{{"d", to_string(d)}, {"s", to_string(s)}}, to_string(rhs), to_string(lhs));
    }
    return report;
}

ProximityProfile proximity_profile(std::span<const Rational> d, unsigned blocks) {
    require_generators(d);
    if (blocks < 1) throw std::invalid_argument("proximity_profile needs at least one block");
    ProximityProfile out;
    out.period = 1;
    for (const auto& di : d) mpz_lcm(out.period.get_mpz_t(), out.period.get_mpz_t(), di.get_num_mpz_t());
    if (!out.period.fits_ulong_p()) throw std::domain_error("lcm of generators too large for sampling");
    const unsigned long period = out.period.get_ui();
    const unsigned long limit = period * blocks;

    // One DP table covers the whole window.
    std::vector<BigInt> ways(limit, BigInt(0));
    ways[0] = 1;
    for (const auto& di : d) {
        const unsigned long step = as_ulong(di);
        for (unsigned long v = step; v < limit; ++v) ways[v] += ways[v - step];
    }

    out.block_max.assign(blocks, Rational(0));
    for (unsigned long s = 0; s < limit; ++s) {
        const Rational gap = abs(Rational(ways[s]) - eval_W1(Rational(s), d));
        auto& slot = out.block_max[s / period];
        slot = std::max(slot, gap);
    }
    out.bound = *std::max_element(out.block_max.begin(), out.block_max.end());
    out.stable = std::all_of(out.block_max.begin(), out.block_max.end(),
                             [&](const Rational& v) { return v == out.block_max.front(); });
    return out;
}

VerificationReport check_proximity(std::span<const Rational> d, unsigned blocks) {
    const auto profile = proximity_profile(d, blocks);
    VerificationReport report("partfunc.proximity");
    report.params()["d"] = to_string(d);
    report.params()["period"] = to_string(profile.period);
    report.params()["bound"] = to_string(profile.bound);
    Json maxima = Json::array();
    for (const auto& v : profile.block_max) maxima.push_back(to_string(v));
    report.params()["block_max"] = maxima;
    for (std::size_t b = 1; b < profile.block_max.size(); ++b)
        report.record(profile.block_max[b] == profile.block_max[0], Json{{"d", to_string(d)}, {"block", b}},
                      to_string(profile.block_max[0]), to_string(profile.block_max[b]));
    return report;
}

VerificationReport check_unit_generators(unsigned m, unsigned long max_s) {
    if (m < 1) throw std::invalid_argument("check_unit_generators needs m >= 1");
    VerificationReport report("partfunc.unit_generators");
    report.params()["m"] = m;
    report.params()["max_s"] = max_s;
    const PointTuple d(m, Rational(1));
    for (unsigned long s = 0; s <= max_s; ++s) {
        const Rational w1 = eval_W1(Rational(s), d);
        const BigInt brute = count_partitions_brute(s, d);
        const BigInt closed = binomial(s + m - 1, static_cast<long>(m - 1));
        const bool ok = w1 == Rational(brute) && brute == closed;
        report.record(ok, Json{{"m", m}, {"s", s}}, to_string(closed),
                      "W1=" + to_string(w1) + ",W=" + to_string(brute));
    }
    return report;
}

}  // namespace sympoly
