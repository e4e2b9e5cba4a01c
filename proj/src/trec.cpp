#include "sympoly/trec.hpp"

#include "sympoly/pcore.hpp"
#include "sympoly/sampling.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace sympoly {

Rational eval_T_via_P(unsigned long r, std::span<const Rational> x) {
    if (x.empty()) throw std::invalid_argument("T_r requires at least one coordinate");
    const Rational chi = product(x);
    if (chi == 0) throw std::domain_error("eval_T_via_P: zero coordinate divides by chi_m; use eval_T_direct");
    const unsigned long m = x.size();
    const unsigned long n = r + m;
    Rational out = eval_P(n, x) / chi;
    out *= Rational(factorial(r)) / Rational(factorial(n));
    if (m % 2 == 0) out = -out;
    return out;
}

Rational eval_T_direct(unsigned long r, std::span<const Rational> x) {
    if (x.empty()) throw std::invalid_argument("T_r requires at least one coordinate");
    // Each factor contributes sum_{k>=1} x^{k-1} t^k / k!; after dividing out
    // t^m the composition sum is the t^r coefficient of
    // prod_j sum_{i>=0} x_j^i t^i / (i+1)!, accumulated degree by degree.
    const std::size_t len = r + 1;
    std::vector<Rational> inv_fact_shifted(len);
    for (std::size_t i = 0; i < len; ++i) inv_fact_shifted[i] = Rational(1) / Rational(factorial(i + 1));

    std::vector<Rational> acc(len, Rational(0));
    acc[0] = 1;
    std::vector<Rational> factor(len);
    std::vector<Rational> next(len);
    for (const auto& xj : x) {
        Rational power = 1;
        for (std::size_t i = 0; i < len; ++i) {
            factor[i] = power * inv_fact_shifted[i];
            power *= xj;
        }
        for (std::size_t d = 0; d < len; ++d) {
            Rational c = 0;
            for (std::size_t i = 0; i <= d; ++i) c += acc[i] * factor[d - i];
            next[d] = c;
        }
        acc.swap(next);
    }
    return Rational(factorial(r)) * acc[r];
}

namespace {

// Solves a x = b exactly; nullopt when a is singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

std::vector<Rational> monomial_row(const std::vector<PartitionMonomial>& basis, const PowerSumVector& e) {
    std::vector<Rational> row;
    row.reserve(basis.size());
    for (const auto& m : basis) row.push_back(PowerSumPoly::monomial(m).eval(e));
    return row;
}

}  // namespace

PowerSumPoly interpolate_powersum(const PointEvaluator& evaluate, int w, std::uint64_t seed,
                                  const InterpolationOptions& options) {
    if (w < 0) throw std::invalid_argument("interpolate_powersum: negative weight");
    const auto basis = partitions_of(w);
    const std::size_t m = options.num_vars ? options.num_vars : static_cast<std::size_t>(std::max(w, 1));
    const int k = std::max(w, 1);

    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        Sampler sampler(seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL);
        std::vector<std::vector<Rational>> matrix;
        std::vector<Rational> rhs;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const PointTuple x = sampler.integer_point(m, 1, options.coord_max);
            matrix.push_back(monomial_row(basis, power_sums(x, k)));
            rhs.push_back(evaluate(x));
        }
        auto coeffs = solve(std::move(matrix), std::move(rhs));
        if (!coeffs) continue;

        PowerSumPoly out;
        for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], (*coeffs)[i]);

        for (std::size_t i = 0; i < options.held_out; ++i) {
            const PointTuple x = sampler.integer_point(m, 1, options.coord_max);
            if (out.eval(power_sums(x, k)) != evaluate(x))
                throw InterpolationError("interpolated weight-" + std::to_string(w) +
                                             " polynomial disagrees with evaluator at held-out point " +
                                             to_string(std::span<const Rational>(x)),
                                         x);
        }
        return out;
    }
    throw InterpolationError("sample matrix singular after " + std::to_string(options.max_attempts) +
                             " attempts (weight " + std::to_string(w) + ")");
}

PowerSumPoly compute_T_poly(int r, std::uint64_t seed) {
    if (r < 0) throw std::invalid_argument("compute_T_poly: negative r");
    const auto ur = static_cast<unsigned long>(r);
    return interpolate_powersum([ur](std::span<const Rational> x) { return eval_T_direct(ur, x); }, r, seed);
}

}  // namespace sympoly
