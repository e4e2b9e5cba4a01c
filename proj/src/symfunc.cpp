#include "sympoly/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sympoly {

const char* variable_prefix(Family family) { return family == Family::E ? "E" : "s"; }

PartitionMonomial::PartitionMonomial(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end());
}

std::vector<std::pair<int, int>> PartitionMonomial::exponents() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

int PartitionMonomial::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool PartitionMonomial::contains(int index) const {
    return std::binary_search(parts_.begin(), parts_.end(), index);
}

int PartitionMonomial::count_above_one() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p >= 2; }));
}

std::string PartitionMonomial::to_string(Family family) const {
    if (parts_.empty()) return "1";
    std::string out;
    for (auto [index, mult] : exponents()) {
        if (!out.empty()) out += '*';
        out += variable_prefix(family);
        out += std::to_string(index);
        if (mult > 1) out += '^' + std::to_string(mult);
    }
    return out;
}

PartitionMonomial PartitionMonomial::operator*(const PartitionMonomial& other) const {
    std::vector<int> merged;
    merged.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(merged));
    PartitionMonomial out;
    out.parts_ = std::move(merged);
    return out;
}

namespace {

void partitions_rec(int remaining, int min_part, std::vector<int>& current, std::vector<PartitionMonomial>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = min_part; p <= remaining; ++p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<PartitionMonomial> partitions_of(int w) {
    if (w < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<PartitionMonomial> out;
    std::vector<int> current;
    // Non-decreasing parts with the smallest first part tried first gives
    // lexicographic order directly.
    partitions_rec(w, 1, current, out);
    return out;
}

PowerSumVector::PowerSumVector(std::span<const Rational> x, int count) {
    if (count < 1) throw std::invalid_argument("power_sums: count must be positive");
    values_.assign(static_cast<std::size_t>(count), Rational(0));
    for (const auto& xj : x) {
        Rational power = xj;
        for (int k = 0; k < count; ++k) {
            values_[static_cast<std::size_t>(k)] += power;
            power *= xj;
        }
    }
}

const Rational& PowerSumVector::at(int k) const {
    if (k < 1 || static_cast<std::size_t>(k) > values_.size())
        throw std::out_of_range("power sum E" + std::to_string(k) + " not available (have " +
                                std::to_string(values_.size()) + ")");
    return values_[static_cast<std::size_t>(k - 1)];
}

PowerSumPoly PowerSumPoly::constant(const Rational& c) { return monomial(PartitionMonomial(), c); }

PowerSumPoly PowerSumPoly::monomial(PartitionMonomial m, const Rational& c) {
    PowerSumPoly p;
    p.add_term(m, c);
    return p;
}

Rational PowerSumPoly::coeff(const PartitionMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PowerSumPoly::add_term(const PartitionMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

int PowerSumPoly::homogeneous_weight() const {
    if (terms_.empty()) return 0;
    const int w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return -1;
    return w;
}

int PowerSumPoly::max_index() const {
    int out = 0;
    for (const auto& [m, c] : terms_) out = std::max(out, m.max_index());
    return out;
}

Rational PowerSumPoly::eval(const PowerSumVector& e) const {
    Rational out = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (auto [index, mult] : m.exponents()) term *= pow(e.at(index), static_cast<unsigned long>(mult));
        out += term;
    }
    return out;
}

PowerSumPoly PowerSumPoly::flip_even_signs() const {
    PowerSumPoly out = *this;
    for (auto& [m, c] : out.terms_)
        if (m.count_above_one() % 2 == 1) c = -c;
    return out;
}

PowerSumPoly& PowerSumPoly::operator+=(const PowerSumPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

PowerSumPoly PowerSumPoly::operator-() const { return scaled(-1); }

PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b) {
    PowerSumPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

PowerSumPoly PowerSumPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    PowerSumPoly out = *this;
    for (auto& [m, v] : out.terms_) v *= c;
    return out;
}

std::string PowerSumPoly::to_string(Family family) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Rational mag = abs(c);
        if (m.empty())
            out += sympoly::to_string(mag);
        else
            out += sympoly::to_string(mag) + "*" + m.to_string(family);
    }
    return out;
}

std::string PowerSumPoly::to_display(Family family) const {
    if (terms_.empty()) return "0";
    BigInt denom = 1;
    for (const auto& [m, c] : terms_) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
    std::string body;
    for (const auto& [m, c] : terms_) {
        BigInt scaled_num = c.get_num() * (denom / c.get_den());
        if (!body.empty()) body += scaled_num < 0 ? " - " : " + ";
        else if (scaled_num < 0) body += "-";
        BigInt mag = abs(scaled_num);
        if (m.empty())
            body += sympoly::to_string(mag);
        else if (mag == 1)
            body += m.to_string(family);
        else
            body += sympoly::to_string(mag) + "*" + m.to_string(family);
    }
    if (denom == 1) return body;
    return "(" + body + ")/" + sympoly::to_string(denom);
}

nlohmann::ordered_json PowerSumPoly::to_json(Family family) const {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [m, c] : terms_) out[m.to_string(family)] = sympoly::to_string(c);
    return out;
}

}  // namespace sympoly
