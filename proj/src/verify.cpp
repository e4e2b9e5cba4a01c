#include "sympoly/verify.hpp"

#include "sympoly/partfunc.hpp"
#include "sympoly/pcore.hpp"
#include "sympoly/sampling.hpp"
#include "sympoly/symfunc.hpp"
#include "sympoly/trec.hpp"

#include <stdexcept>
#include <string>

namespace sympoly {

namespace {

std::string point_str(const PointTuple& x) { return to_string(std::span<const Rational>(x)); }

// Signed rational points with small numerators and denominators.
PointTuple signed_point(Sampler& sampler, std::size_t m) { return sampler.rational_point(m, -20, 20, 6); }

int sign_of(const Rational& q) { return sgn(q); }

}  // namespace

VerificationReport verify_conjecture1(int max_r, std::uint64_t seed) {
    if (max_r < 2) throw std::domain_error("conjecture1 requires max_r >= 2");
    VerificationReport report("conjecture1");
    report.params()["max_r"] = max_r;
    report.params()["seed"] = seed;
    Json per_r = Json::object();
    for (int r = 2; r <= max_r; ++r) {
        const PowerSumPoly t = compute_T_poly(r, seed);
        const PowerSumPoly flipped = flip_even_signs(compute_f_poly(r, seed));
        const bool ok = t == flipped;
        per_r[std::to_string(r)] = ok ? "pass" : "fail";
        report.record(ok, Json{{"r", r}}, t.to_string(Family::E), flipped.to_string(Family::E));
    }
    report.params()["by_r"] = per_r;
    return report;
}

VerificationReport verify_conjecture2(unsigned m, std::uint64_t seed, unsigned trials) {
    if (m < 2) throw std::domain_error("conjecture2 requires m >= 2");
    VerificationReport report("conjecture2");
    report.params()["m"] = m;
    report.params()["seed"] = seed;
    report.params()["trials"] = trials;
    Json per_n = Json::object();
    for (unsigned n = 1; 2 * n <= m; ++n) {
        const auto sub = verify_relation26(RatioFamily::T, n, m, seed, trials);
        per_n[std::to_string(n)] = sub.status();
        report.absorb(sub);
    }
    report.params()["by_n"] = per_n;
    return report;
}

std::pair<Rational, Rational> ratio_bounds(int r, unsigned m) {
    if (m < 1) throw std::domain_error("bounds need m >= 1");
    const Rational M(m);
    const Rational M2 = M * M;
    const Rational M7 = pow(M, 7);
    auto q = [](long p, long d) { return make_rational(p, d); };
    switch (r) {
    case 2:
        return {1 + 1 / (3 * M), q(4, 3)};
    case 3:
        return {1 + 1 / M, Rational(2)};
    case 4:
        return {q(13, 15) + 2 / M + 1 / (3 * M2), q(2, 3) * (5 - 1 / (5 * M))};
    case 5:
        return {q(1, 3) + q(10, 3) / M + q(5, 3) / M2, 2 * (3 - 1 / (3 * M))};
    case 6:
        return {q(8, 9) + 5 / M + 3 / M2 + q(16, 63) / M7, q(8, 3) * (q(31, 7) - 1 / M)};
    case 7:
        return {q(2, 9) + 7 / M + 7 / M2 + q(16, 9) / M7, q(4, 3) * (19 - 7 / M)};
    default:
        throw std::domain_error("bounds only printed for 2 <= r <= 7");
    }
}

VerificationReport verify_bounds(int max_r, unsigned m, std::uint64_t seed, unsigned trials) {
    if (max_r < 2 || max_r > 7) throw std::domain_error("bounds require 2 <= max_r <= 7");
    if (m < 1) throw std::domain_error("bounds require m >= 1");
    VerificationReport report("bounds");
    report.params()["max_r"] = max_r;
    report.params()["m"] = m;
    report.params()["seed"] = seed;
    report.params()["trials"] = trials;

    if (m == 1) {
        for (int r = 2; r <= max_r; ++r) {
            const auto [lo, hi] = ratio_bounds(r, 1);
            const Rational single = make_rational(BigInt(1) << r, r + 1);
            report.record(lo == hi && lo == single, Json{{"r", r}, {"check", "m=1 coincidence"}}, to_string(single),
                          to_string(lo) + ".." + to_string(hi));
        }
    }

    Sampler sampler(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const PointTuple x = sampler.integer_point(m, 1, 50);
        const Rational t1 = eval_T_direct(1, x);
        for (int r = 2; r <= max_r; ++r) {
            const Rational ratio = eval_T_direct(static_cast<unsigned long>(r), x) / pow(t1, static_cast<unsigned long>(r));
            const auto [lo, hi] = ratio_bounds(r, m);
            report.record(lo <= ratio && ratio <= hi, Json{{"r", r}, {"x", point_str(x)}},
                          "[" + to_string(lo) + ", " + to_string(hi) + "]", to_string(ratio));
        }
    }
    return report;
}

VerificationReport verify_power_sum_relations(unsigned m, std::uint64_t seed, unsigned trials) {
    if (m < 1 || m > 3) throw std::domain_error("power-sum relations are printed for m = 1, 2, 3 only");
    VerificationReport report("relations");
    report.params()["m"] = m;
    report.params()["seed"] = seed;
    report.params()["trials"] = trials;

    Sampler sampler(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const PointTuple x = signed_point(sampler, m);
        const PowerSumVector e = power_sums(x, 6);
        const Rational& E1 = e.at(1);
        const Rational& E2 = e.at(2);
        const Rational& E3 = e.at(3);
        auto check = [&](int k, const Rational& printed) {
            report.record(printed == e.at(k), Json{{"k", k}, {"x", point_str(x)}}, to_string(e.at(k)),
                          to_string(printed));
        };
        if (m == 1) {
            for (int k = 2; k <= 6; ++k) check(k, pow(E1, static_cast<unsigned long>(k)));
        } else if (m == 2) {
            check(3, Rational(3 * E2 - E1 * E1) * E1 / 2);
            check(4, E1 * E1 * E2 + Rational(E2 * E2 - pow(E1, 4)) / 2);
            check(5, Rational(5 * E2 * E2 - pow(E1, 4)) * E1 / 4);
            check(6, Rational(E2 * E2 + 6 * E1 * E1 * E2 - 3 * pow(E1, 4)) * E2 / 4);
        } else {
            check(4, Rational(pow(E1, 4) + 3 * E2 * E2 - 6 * E1 * E1 * E2 + 8 * E1 * E3) / 6);
            check(5, Rational(pow(E1, 5) - 5 * pow(E1, 3) * E2 + 5 * E1 * E1 * E3 + 5 * E2 * E3) / 6);
            check(6, Rational(pow(E1, 6) + 2 * pow(E2, 3) + 4 * E3 * E3 - 9 * E1 * E1 * E2 * E2 + 12 * E1 * E2 * E3 -
                              3 * pow(E1, 4) * E2 + 4 * pow(E1, 3) * E3) /
                         12);
        }
    }
    return report;
}

namespace {

void suite_params(VerificationReport& report, unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials) {
    report.params()["max_n"] = max_n;
    report.params()["max_m"] = max_m;
    report.params()["seed"] = seed;
    report.params()["trials"] = trials;
}

void require_suite(unsigned max_n, unsigned max_m, unsigned trials) {
    if (max_m < 1 || max_n < 1 || trials < 1) throw std::domain_error("suite needs max_n, max_m, trials >= 1");
}

}  // namespace

VerificationReport verify_zero_coordinate(unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials) {
    require_suite(max_n, max_m, trials);
    VerificationReport report("zero_coordinate");
    suite_params(report, max_n, max_m, seed, trials);
    Sampler sampler(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const auto m = static_cast<std::size_t>(sampler.integer(1, max_m));
        const auto n = static_cast<unsigned long>(sampler.integer(1, max_n));
        PointTuple x = sampler.nonzero_point(m, 20, 6);
        x[static_cast<std::size_t>(sampler.integer(0, static_cast<long>(m) - 1))] = 0;
        const Rational value = eval_P(n, x);
        report.record(value == 0, Json{{"n", n}, {"x", point_str(x)}}, "0", to_string(value));
    }
    return report;
}

VerificationReport verify_e1_divisibility(unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials) {
    require_suite(max_n, max_m, trials);
    VerificationReport report("e1_divisibility");
    suite_params(report, max_n, max_m, seed, trials);
    Sampler sampler(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const auto m = static_cast<std::size_t>(sampler.integer(1, max_m));
        // n with n - m odd, 1 <= n <= max_n
        std::vector<unsigned long> candidates;
        for (unsigned long n = 1; n <= max_n; ++n)
            if ((n + m) % 2 == 1) candidates.push_back(n);
        if (candidates.empty()) continue;
        const auto n = candidates[static_cast<std::size_t>(sampler.integer(0, static_cast<long>(candidates.size()) - 1))];
        PointTuple x = signed_point(sampler, m);
        x.back() = 0;
        x.back() = -sum(x);
        const Rational value = eval_P(n, x);
        report.record(value == 0, Json{{"n", n}, {"x", point_str(x)}}, "0", to_string(value));
    }
    return report;
}

VerificationReport verify_sign_alternation(unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials) {
    require_suite(max_n, max_m, trials);
    if (max_n < max_m) throw std::domain_error("sign alternation needs max_n >= max_m");
    VerificationReport report("sign_alternation");
    suite_params(report, max_n, max_m, seed, trials);
    Sampler sampler(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const auto m = static_cast<std::size_t>(sampler.integer(1, max_m));
        const auto n = static_cast<unsigned long>(sampler.integer(static_cast<long>(m), max_n));
        const PointTuple x = sampler.rational_point(m, 1, 30, 6);
        const Rational value = eval_P(n, x);
        const int expected = m % 2 == 1 ? 1 : -1;
        report.record(sign_of(value) == expected, Json{{"n", n}, {"x", point_str(x)}},
                      expected > 0 ? "> 0" : "< 0", to_string(value));
    }
    return report;
}

VerificationReport verify_low_degree(unsigned max_m, std::uint64_t seed, unsigned trials) {
    require_suite(1, max_m, trials);
    VerificationReport report("low_degree");
    report.params()["max_m"] = max_m;
    report.params()["seed"] = seed;
    report.params()["trials"] = trials;
    Sampler sampler(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const auto m = static_cast<std::size_t>(sampler.integer(1, max_m));
        const PointTuple x = signed_point(sampler, m);
        for (unsigned long n = 1; n < m; ++n) {
            const Rational value = eval_P(n, x);
            report.record(value == 0, Json{{"n", n}, {"x", point_str(x)}}, "0", to_string(value));
        }
        Rational expected = Rational(factorial(m)) * product(x);
        if (m % 2 == 0) expected = -expected;
        const Rational value = eval_P(m, x);
        report.record(value == expected, Json{{"n", m}, {"x", point_str(x)}}, to_string(expected), to_string(value));
    }
    return report;
}

VerificationReport verify_recursion_oracle(unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials) {
    require_suite(max_n, max_m, trials);
    VerificationReport report("p.recursion");
    suite_params(report, max_n, max_m, seed, trials);
    Sampler sampler(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const auto m = static_cast<std::size_t>(sampler.integer(1, max_m));
        const auto n = static_cast<unsigned long>(sampler.integer(1, max_n));
        const PointTuple x = signed_point(sampler, m);
        const Rational direct = eval_P(n, x);
        const Rational recursive = eval_P_recursive(n, x);
        report.record(direct == recursive, Json{{"n", n}, {"x", point_str(x)}}, to_string(direct),
                      to_string(recursive));
    }
    return report;
}

VerificationReport verify_t_oracle(unsigned max_r, unsigned max_m, std::uint64_t seed, unsigned trials) {
    require_suite(1, max_m, trials);
    VerificationReport report("t.composition");
    report.params()["max_r"] = max_r;
    report.params()["max_m"] = max_m;
    report.params()["seed"] = seed;
    report.params()["trials"] = trials;
    Sampler sampler(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const auto m = static_cast<std::size_t>(sampler.integer(1, max_m));
        const auto r = static_cast<unsigned long>(sampler.integer(0, max_r));
        const PointTuple x = sampler.nonzero_point(m, 20, 6);
        const Rational via_p = eval_T_via_P(r, x);
        const Rational direct = eval_T_direct(r, x);
        report.record(via_p == direct, Json{{"r", r}, {"x", point_str(x)}}, to_string(via_p), to_string(direct));
    }
    return report;
}

std::vector<VerificationReport> verify_lemmas(unsigned max_n, unsigned max_m, std::uint64_t seed, unsigned trials) {
    // Distinct sub-seeds keep the batteries from sharing sample streams.
    return {
        verify_low_degree(max_m, seed, trials),
        verify_zero_coordinate(max_n, max_m, seed + 1, trials),
        verify_e1_divisibility(max_n, max_m, seed + 2, trials),
        verify_sign_alternation(max_n, max_m, seed + 3, trials),
        verify_recursion_oracle(max_n, max_m, seed + 4, trials),
        verify_t_oracle(max_n > 0 ? max_n - 1 : 0, max_m, seed + 5, trials),
    };
}

std::vector<VerificationReport> verify_parity_suite(unsigned tuples, unsigned s_per_tuple, unsigned max_m,
                                                    std::uint64_t seed) {
    if (tuples < 1 || s_per_tuple < 1 || max_m < 1) throw std::domain_error("parity suite needs positive sizes");
    VerificationReport parity("parity");
    VerificationReport recursion("w1.recursion");
    for (auto* report : {&parity, &recursion}) {
        report->params()["tuples"] = tuples;
        report->params()["s_per_tuple"] = s_per_tuple;
        report->params()["max_m"] = max_m;
        report->params()["seed"] = seed;
    }
    Sampler sampler(seed);
    for (unsigned i = 0; i < tuples; ++i) {
        const auto m = static_cast<std::size_t>(sampler.integer(1, max_m));
        const PointTuple d = sampler.integer_point(m, 1, 12);
        PointTuple s_values;
        for (unsigned j = 0; j < s_per_tuple; ++j) s_values.push_back(sampler.rational(-60, 60, 6));
        parity.absorb(check_parity(d, s_values));
        if (m >= 2) recursion.absorb(check_recursion(d, s_values));
    }
    return {parity, recursion};
}

}  // namespace sympoly
