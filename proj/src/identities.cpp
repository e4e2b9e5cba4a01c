#include "sympoly/identities.hpp"

#include "sympoly/partfunc.hpp"
#include "sympoly/sampling.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace sympoly {

namespace {

// Binomial with a possibly negative top, zero outside 0 <= b <= a.
BigInt bin(long a, long b) {
    if (a < 0) return 0;
    return binomial(static_cast<unsigned long>(a), b);
}

void require_range(unsigned n, unsigned r) {
    if (n < 1 || r < 1 || r > n)
        throw std::domain_error("C_{n,r} requires 1 <= r <= n, got n=" + std::to_string(n) + ", r=" +
                                std::to_string(r));
}

// Walks every composition of `remaining`, carrying the running product.
void nested_sums(long top, unsigned remaining, unsigned parts, const BigInt& running, BigInt& acc,
                 std::uint64_t& terms) {
    for (unsigned k = 1; k <= remaining; ++k) {
        if (k == remaining) {
            // Closing factor with odd lower index.
            const BigInt last = running * bin(top, 2L * k - 1);
            if (last != 0) {
                ++terms;
                if (parts % 2 == 0)
                    acc += last;
                else
                    acc -= last;
            }
        } else {
            const BigInt factor = bin(top, 2L * k);
            if (factor == 0) continue;
            nested_sums(top - 2L * k, remaining - k, parts + 1, running * factor, acc, terms);
        }
    }
}

}  // namespace

CnrValue cnr_recursive(unsigned n, unsigned r) {
    require_range(n, r);
    CnrValue out;
    BigInt acc = 0;
    nested_sums(2L * n - 1, r, 0, BigInt(1), acc, out.terms);
    out.value = r % 2 == 1 ? acc : BigInt(-acc);
    return out;
}

BigInt cnr_closed(unsigned n, unsigned r) {
    if (r > 4) throw std::domain_error("closed form only available for r <= 4");
    require_range(n, r);
    const long N = 2L * n - 1;
    switch (r) {
    case 1:
        return bin(N, 1);
    case 2:
        return bin(N, 2) * bin(N - 2, 1) - bin(N, 3);
    case 3:
        return bin(N, 2) * bin(N - 2, 2) * bin(N - 4, 1) - bin(N, 2) * bin(N - 2, 3) -
               bin(N, 4) * bin(N - 4, 1) + bin(N, 5);
    default:
        return bin(N, 2) * bin(N - 2, 2) * bin(N - 4, 2) * bin(N - 6, 1) -
               bin(N, 2) * bin(N - 2, 4) * bin(N - 6, 1) - bin(N, 4) * bin(N - 4, 2) * bin(N - 6, 1) -
               bin(N, 2) * bin(N - 2, 2) * bin(N - 4, 3) + bin(N, 2) * bin(N - 2, 5) +
               bin(N, 4) * bin(N - 4, 3) + bin(N, 6) * bin(N - 6, 1) - bin(N, 7);
    }
}

std::vector<BigInt> relation26_elimination(unsigned n) {
    if (n < 1) throw std::domain_error("relation26_elimination requires n >= 1");
    // memo[q][r]: coefficient of a_{2(q-r)} in the even-only expansion of a_{2q-1}.
    std::vector<std::vector<BigInt>> memo(n + 1);
    for (unsigned q = 1; q <= n; ++q) {
        auto& row = memo[q];
        row.assign(q + 1, BigInt(0));
        const long top = 2L * q - 1;
        for (unsigned r = 1; r <= q; ++r) row[r] += bin(top, 2L * r - 1);
        for (unsigned k = 1; k < q; ++k) {
            const BigInt factor = bin(top, 2L * k);
            const auto& inner = memo[q - k];
            for (unsigned r = 1; r <= q - k; ++r) row[k + r] -= factor * inner[r];
        }
    }
    return {memo[n].begin() + 1, memo[n].end()};
}

CnrTable::CnrTable(unsigned max_n) : max_n_(max_n) {
    for (unsigned n = 1; n <= max_n; ++n)
        for (unsigned r = 1; r <= n; ++r) entries_.emplace(std::pair{n, r}, cnr_recursive(n, r));
}

const CnrValue& CnrTable::at(unsigned n, unsigned r) const {
    auto it = entries_.find({n, r});
    if (it == entries_.end()) throw std::out_of_range("C_{n,r} not in table");
    return it->second;
}

Json CnrTable::to_json() const {
    Json rows = Json::array();
    for (const auto& [key, v] : entries_)
        rows.push_back(Json{{"n", key.first}, {"r", key.second}, {"value", to_string(v.value)}, {"terms", v.terms}});
    return rows;
}

VerificationReport verify_eq28_equivalence(unsigned n) {
    VerificationReport report("eq28");
    report.params()["n"] = n;
    const auto eliminated = relation26_elimination(n);
    Json coefficients = Json::array();
    for (unsigned r = 1; r <= n; ++r) {
        const CnrValue c = cnr_recursive(n, r);
        const BigInt signed_c = r % 2 == 1 ? c.value : BigInt(-c.value);
        coefficients.push_back(to_string(signed_c));
        const Json inputs{{"n", n}, {"r", r}};
        report.record(signed_c == eliminated[r - 1], inputs, to_string(eliminated[r - 1]), to_string(signed_c));
        report.record(c.value > 0, inputs, "C_{n,r} > 0", to_string(c.value));
        const std::uint64_t expected_terms = std::uint64_t{1} << (r - 1);
        report.record(c.terms == expected_terms, Json{{"n", n}, {"r", r}, {"check", "terms"}},
                      std::to_string(expected_terms), std::to_string(c.terms));
    }
    report.params()["coefficients"] = coefficients;
    return report;
}

VerificationReport verify_cnr_closed(unsigned max_n) {
    VerificationReport report("cnr.closed");
    report.params()["max_n"] = max_n;
    for (unsigned n = 1; n <= max_n; ++n)
        for (unsigned r = 1; r <= std::min(n, 4U); ++r) {
            const BigInt closed = cnr_closed(n, r);
            const BigInt nested = cnr_recursive(n, r).value;
            report.record(closed == nested, Json{{"n", n}, {"r", r}}, to_string(closed), to_string(nested));
        }
    return report;
}

VerificationReport verify_relation26(RatioFamily family, unsigned n, unsigned m, std::uint64_t seed,
                                     unsigned trials) {
    if (n < 1 || m < 1 || trials < 1) throw std::domain_error("relation26 requires n, m, trials >= 1");
    VerificationReport report(family == RatioFamily::T ? "relation26.T" : "relation26.f");
    report.params()["n"] = n;
    report.params()["m"] = m;
    report.params()["seed"] = seed;
    report.params()["trials"] = trials;
    report.params()["range"] = 2 * n <= m ? "inside" : "outside";

    const unsigned top = 2 * n - 1;
    Sampler sampler(seed ^ (std::uint64_t{n} << 32) ^ m);
    for (unsigned t = 0; t < trials; ++t) {
        const PointTuple x = sampler.rational_point(m, 1, 50, 7);
        std::vector<Rational> g;
        if (family == RatioFamily::F) {
            g = eval_f_upto(top, x);
        } else {
            for (unsigned j = 0; j <= top; ++j) g.push_back(eval_T_direct(j, x));
        }
        const Rational& g1 = g[1];
        if (g1 == 0) {
            report.record_failure(Failure{Json{{"x", to_string(std::span<const Rational>(x))}}, "g_1 != 0", "0"});
            continue;
        }
        auto ratio = [&](unsigned j) -> Rational { return g[j] / pow(g1, j); };
        Rational rhs = 0;
        for (unsigned k = 1; k <= top; ++k) {
            const Rational term = Rational(binomial(top, k)) * ratio(top - k);
            if (k % 2 == 1)
                rhs += term;
            else
                rhs -= term;
        }
        const Rational lhs = ratio(top);
        report.record(lhs == rhs, Json{{"n", n}, {"x", to_string(std::span<const Rational>(x))}}, to_string(rhs),
                      to_string(lhs));
    }
    return report;
}

}  // namespace sympoly
