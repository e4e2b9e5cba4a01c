#include "sympoly/rational.hpp"
#include "test_support.hpp"
#include "sympoly/sampling.hpp"

#include <doctest.h>

using namespace sympoly;
using sympoly::testing::Q;

TEST_CASE("bernoulli: published examples") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Q(-1, 2));
    CHECK(bernoulli(2) == Q(1, 6));
    CHECK(bernoulli(12) == Q(-691, 2730));
    CHECK(bernoulli(5) == 0);
}

TEST_CASE("bernoulli: defining recurrence and odd vanishing") {
    for (unsigned long k = 1; k <= 40; ++k) {
        Rational acc = 0;
        for (unsigned long j = 0; j <= k; ++j) acc += Rational(binomial(k + 1, static_cast<long>(j))) * bernoulli(j);
        CHECK_MESSAGE(acc == 0, "k=" << k);
    }
    for (unsigned long j = 1; j <= 20; ++j) CHECK(bernoulli(2 * j + 1) == 0);
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
}

TEST_CASE("rational text form") {
    CHECK(to_string(Q(3, 6)) == "1/2");
    CHECK(to_string(Q(-4, 2)) == "-2");
    CHECK(to_string(Q(0, 5)) == "0");
    CHECK(parse_rational("4/6") == Q(2, 3));
    CHECK(parse_rational("-7") == Q(-7));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    for (const char* bad : {"", "1/0", " 1", "1 ", "1/", "/2", "a", "1.5", "--1", "+3", "1/-2"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    CHECK(parse_point("1,-2,3/4") == PointTuple{Q(1), Q(-2), Q(3, 4)});
    CHECK_THROWS(parse_point("1,,2"));
}

TEST_CASE("rational arithmetic is exact and canonical") {
    Sampler sampler(7);
    for (int i = 0; i < 500; ++i) {
        const Rational a = sampler.rational(-1000, 1000, 97);
        Rational b = sampler.rational(-1000, 1000, 97);
        CHECK(Rational((a + b) - b) == a);
        if (b != 0) CHECK(Rational((a * b) / b) == a);
        const Rational c = a * b + a;
        CHECK(c.get_den() > 0);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
        CHECK(g == 1);
        CHECK(parse_rational(to_string(c)) == c);
    }
}

TEST_CASE("pow on rationals") {
    CHECK(pow(Q(-2, 3), 3) == Q(-8, 27));
    CHECK(pow(Q(5), 0) == 1);
    CHECK(pow(Q(0), 0) == 1);
}
