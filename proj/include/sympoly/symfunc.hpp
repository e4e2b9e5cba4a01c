#pragma once

// Polynomials in the power sums E_k = sum_j x_j^k, indexed by integer
// partitions. The same container holds T_r (E-variables) and f_r
// (sigma-variables); the variable family only matters when printing.

#include "sympoly/rational.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sympoly {

enum class Family { E, Sigma };

/// Variable prefix used in text output: "E" or "s".
const char* variable_prefix(Family family);

/// prod_k E_k^{a_k}, stored as the multiset of parts in ascending order.
/// The empty monomial is the constant 1.
class PartitionMonomial {
public:
    PartitionMonomial() = default;
    /// Parts in any order; zero or negative parts are rejected.
    explicit PartitionMonomial(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    /// (index, multiplicity) pairs, index ascending, multiplicities >= 1.
    std::vector<std::pair<int, int>> exponents() const;
    int weight() const;
    int max_index() const { return parts_.empty() ? 0 : parts_.back(); }
    bool empty() const { return parts_.empty(); }
    bool contains(int index) const;
    /// Number of factors E_k with k >= 2, counted with multiplicity.
    int count_above_one() const;

    /// "E1^2*E2", "1" for the empty monomial.
    std::string to_string(Family family = Family::E) const;

    PartitionMonomial operator*(const PartitionMonomial& other) const;

    // Lexicographic on ascending parts, so E1^2*E2 sorts before E4.
    auto operator<=>(const PartitionMonomial&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of w in canonical (lexicographic, ascending parts) order.
std::vector<PartitionMonomial> partitions_of(int w);

/// [E_1, ..., E_K] at a point.
class PowerSumVector {
public:
    PowerSumVector(std::span<const Rational> x, int count);

    std::size_t size() const { return values_.size(); }
    /// E_k for 1 <= k <= size(); throws std::out_of_range otherwise.
    const Rational& at(int k) const;
    std::span<const Rational> values() const { return values_; }

private:
    std::vector<Rational> values_;
};

inline PowerSumVector power_sums(std::span<const Rational> x, int count) { return PowerSumVector(x, count); }

class PowerSumPoly {
public:
    using Terms = std::map<PartitionMonomial, Rational>;

    PowerSumPoly() = default;
    static PowerSumPoly constant(const Rational& c);
    static PowerSumPoly monomial(PartitionMonomial m, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of m, zero when absent.
    Rational coeff(const PartitionMonomial& m) const;
    /// Adds c to the coefficient of m, dropping the entry if it cancels.
    void add_term(const PartitionMonomial& m, const Rational& c);

    /// The common weight of all monomials, or -1 if not weighted-homogeneous.
    /// The zero polynomial reports 0.
    int homogeneous_weight() const;
    int max_index() const;

    Rational eval(const PowerSumVector& e) const;

    /// E_k -> -E_k for every k >= 2, E_1 fixed.
    PowerSumPoly flip_even_signs() const;

    PowerSumPoly& operator+=(const PowerSumPoly& other);
    friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
    PowerSumPoly operator-() const;
    friend PowerSumPoly operator-(const PowerSumPoly& a, const PowerSumPoly& b) { return a + (-b); }
    friend PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b);
    PowerSumPoly scaled(const Rational& c) const;

    friend bool operator==(const PowerSumPoly&, const PowerSumPoly&) = default;

    /// "1/4*E1^2 + 1/12*E2"; "0" for the zero polynomial.
    std::string to_string(Family family = Family::E) const;
    /// Numerator over a common positive denominator: "(3*E1^2 + E2)/12".
    std::string to_display(Family family = Family::E) const;
    /// Monomial string -> rational string, in canonical monomial order.
    nlohmann::ordered_json to_json(Family family = Family::E) const;

private:
    Terms terms_;
};

inline Rational eval_poly(const PowerSumPoly& p, const PowerSumVector& e) { return p.eval(e); }
inline PowerSumPoly flip_even_signs(const PowerSumPoly& p) { return p.flip_even_signs(); }

}  // namespace sympoly
