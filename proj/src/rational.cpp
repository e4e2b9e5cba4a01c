#include "sympoly/rational.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

namespace sympoly {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt pow(const BigInt& x, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), x.get_mpz_t(), e);
    return out;
}

Rational pow(const Rational& x, unsigned long e) {
    // Powers of a reduced fraction stay reduced.
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), e);
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const BigInt& z) { return z.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return make_rational(n, d);
}

PointTuple parse_point(std::string_view text) {
    PointTuple out;
    if (text.empty()) throw std::invalid_argument("empty coordinate list");
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(std::span<const Rational> point) {
    std::string out;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) out += ',';
        out += to_string(point[i]);
    }
    return out;
}

BigInt factorial(unsigned long a) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), a);
    return out;
}

BigInt binomial(unsigned long a, long b) {
    if (b < 0 || static_cast<unsigned long>(b) > a) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), a, static_cast<unsigned long>(b));
    return out;
}

Rational bernoulli(unsigned long k) {
    static std::mutex mutex;
    static std::vector<Rational> memo{Rational(1)};

    std::lock_guard lock(mutex);
    // sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1
    while (memo.size() <= k) {
        const unsigned long n = memo.size();
        Rational acc = 0;
        for (unsigned long j = 0; j < n; ++j) acc += Rational(binomial(n + 1, static_cast<long>(j))) * memo[j];
        memo.push_back(-acc / Rational(n + 1));
    }
    return memo[k];
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational product(std::span<const Rational> xs) {
    Rational out = 1;
    for (const auto& x : xs) out *= x;
    return out;
}

Rational sum(std::span<const Rational> xs) {
    Rational out = 0;
    for (const auto& x : xs) out += x;
    return out;
}

}  // namespace sympoly
