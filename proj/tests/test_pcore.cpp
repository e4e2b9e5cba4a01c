#include "sympoly/pcore.hpp"
#include "sympoly/sampling.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sympoly;
using sympoly::testing::pt;
using sympoly::testing::Q;

TEST_CASE("eval_P examples") {
    CHECK(eval_P(3, pt({1, 1, 1})) == 6);
    CHECK(eval_P(1, pt({1, 2})) == 0);
    CHECK(eval_P(3, pt({1, 2})) == -18);
    CHECK(eval_P(5, pt({1, 1})) == -30);
    CHECK(eval_P(4, pt({1, 1, 1})) == 36);
    CHECK(eval_P(4, pt({7})) == 2401);
}

TEST_CASE("eval_P_recursive examples") {
    CHECK(eval_P_recursive(2, pt({1, 1})) == -2);
    CHECK(eval_P_recursive(3, pt({1, 2})) == -18);
    CHECK(eval_P_recursive(4, pt({1, 1, 1})) == 36);
}

TEST_CASE("eval_P argument errors") {
    CHECK_THROWS_AS(eval_P(0, pt({1})), std::invalid_argument);
    CHECK_THROWS_AS(eval_P(2, PointTuple{}), std::invalid_argument);
    CHECK_THROWS_AS(eval_P_recursive(0, pt({1})), std::invalid_argument);
    PointTuple many(5, Q(1));
    CHECK_THROWS_AS(eval_P(5, many, 4), CapacityError);
    CHECK(eval_P(5, many, 5) == 120);
}

TEST_CASE("property: permutation invariance and homogeneity") {
    Sampler s(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = static_cast<std::size_t>(s.integer(1, 6));
        const auto n = static_cast<unsigned long>(s.integer(1, 9));
        PointTuple x = s.rational_point(m, -12, 12, 5);
        const Rational base = eval_P(n, x);
        PointTuple shuffled = x;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[static_cast<std::size_t>(s.integer(0, static_cast<long>(i) - 1))]);
        CHECK(eval_P(n, shuffled) == base);

        const Rational t = s.rational(-4, 4, 3);
        PointTuple scaled = x;
        for (auto& v : scaled) v *= t;
        CHECK(eval_P(n, scaled) == pow(t, n) * base);
    }
}

TEST_CASE("property: low-degree identities, zero coordinate, E1 divisibility, signs") {
    Sampler s(5);
    for (int trial = 0; trial < 80; ++trial) {
        const auto m = static_cast<std::size_t>(s.integer(1, 6));
        PointTuple x = s.rational_point(m, -10, 10, 4);
        for (unsigned long n = 1; n < m; ++n) CHECK(eval_P(n, x) == 0);
        Rational expected = Rational(factorial(m)) * product(x);
        if (m % 2 == 0) expected = -expected;
        CHECK(eval_P(m, x) == expected);

        const auto n = static_cast<unsigned long>(s.integer(1, 10));
        PointTuple z = x;
        z[static_cast<std::size_t>(s.integer(0, static_cast<long>(m) - 1))] = 0;
        CHECK(eval_P(n, z) == 0);

        PointTuple balanced = x;
        balanced.back() = 0;
        balanced.back() = -sum(balanced);
        for (unsigned long k = 1; k <= 10; ++k)
            if ((k + m) % 2 == 1) CHECK(eval_P(k, balanced) == 0);

        const PointTuple positive = s.rational_point(m, 1, 20, 4);
        for (unsigned long k = m; k <= 10; ++k) CHECK(sgn(eval_P(k, positive)) == (m % 2 == 1 ? 1 : -1));
    }
}

TEST_CASE("property: subset enumeration and recursion agree at signed points") {
    Sampler s(9);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = static_cast<std::size_t>(s.integer(1, 6));
        const auto n = static_cast<unsigned long>(s.integer(1, 10));
        const PointTuple x = s.rational_point(m, -15, 15, 7);
        CHECK(eval_P(n, x) == eval_P_recursive(n, x));
    }
}
