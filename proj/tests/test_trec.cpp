#include "sympoly/pcore.hpp"
#include "sympoly/sampling.hpp"
#include "sympoly/trec.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace sympoly;
using sympoly::testing::pt;
using sympoly::testing::Q;

TEST_CASE("eval_T_via_P examples") {
    CHECK(eval_T_via_P(1, pt({1, 1})) == 1);
    CHECK(eval_T_via_P(0, pt({3, 5, 7})) == 1);
    CHECK(eval_T_via_P(2, pt({1, 1})) == Q(7, 6));
    CHECK_THROWS_AS(eval_T_via_P(2, pt({1, 0})), std::domain_error);
}

TEST_CASE("eval_T_direct examples") {
    CHECK(eval_T_direct(3, pt({2})) == 2);
    CHECK(eval_T_direct(1, pt({1, 1})) == 1);
    CHECK(eval_T_direct(0, pt({1, 2, 3})) == 1);
    // Defined at zero coordinates, where the P route cannot divide.
    CHECK(eval_T_direct(2, pt({0, 0})) == 0);
    CHECK(eval_T_direct(1, pt({0, 4})) == 2);
}

TEST_CASE("single variable closed form") {
    for (unsigned long r = 0; r <= 8; ++r) {
        const PointTuple x{Q(3, 2)};
        CHECK(eval_T_direct(r, x) == pow(Q(3, 2), r) / Rational(r + 1));
    }
}

TEST_CASE("property: composition odometer oracle matches eval_T_direct") {
    Sampler s(21);
    for (int trial = 0; trial < 80; ++trial) {
        const auto m = static_cast<std::size_t>(s.integer(1, 5));
        const auto r = static_cast<unsigned long>(s.integer(0, 7));
        const PointTuple x = s.rational_point(m, -9, 9, 4);
        CHECK(eval_T_direct(r, x) == sympoly::testing::oracle_T_compositions(r, x));
    }
}

TEST_CASE("property: both T routes agree and T is positive at positive points") {
    Sampler s(22);
    for (int trial = 0; trial < 150; ++trial) {
        const auto m = static_cast<std::size_t>(s.integer(1, 6));
        const auto r = static_cast<unsigned long>(s.integer(0, 9));
        const PointTuple x = s.nonzero_point(m, 12, 5);
        CHECK(eval_T_via_P(r, x) == eval_T_direct(r, x));
        const PointTuple pos = s.rational_point(m, 1, 30, 5);
        CHECK(eval_T_direct(r, pos) > 0);
    }
}

TEST_CASE("interpolate_powersum examples") {
    const auto t2 = interpolate_powersum([](std::span<const Rational> x) { return eval_T_direct(2, x); }, 2, 1);
    CHECK(t2.to_json().dump() == R"({"E1^2":"1/4","E2":"1/12"})");
    const auto t0 = interpolate_powersum([](std::span<const Rational> x) { return eval_T_direct(0, x); }, 0, 1);
    CHECK(t0 == PowerSumPoly::constant(1));
}

TEST_CASE("interpolate_powersum reports a held-out witness for non-polynomial input") {
    // Not a weight-2 polynomial in the power sums.
    auto bogus = [](std::span<const Rational> x) -> Rational { return x[0] * x[0]; };
    try {
        interpolate_powersum(bogus, 2, 3);
        FAIL("expected InterpolationError");
    } catch (const InterpolationError& e) {
        CHECK(e.witness().size() == 2);
    }
}

TEST_CASE("compute_T_poly reproduces the published table") {
    const auto table = sympoly::testing::published_T();
    for (int r = 0; r <= 7; ++r) CHECK_MESSAGE(compute_T_poly(r) == table[static_cast<std::size_t>(r)], "r=" << r);
    CHECK(compute_T_poly(3).to_json().dump() == R"({"E1^3":"1/8","E1*E2":"1/8"})");
    CHECK(compute_T_poly(4).to_json().dump() == R"({"E1^4":"1/16","E1^2*E2":"1/8","E2^2":"1/48","E4":"-1/120"})");
    CHECK(compute_T_poly(1).to_json().dump() == R"({"E1":"1/2"})");
}

TEST_CASE("compute_T_poly structure up to r = 9") {
    for (int r = 0; r <= 9; ++r) {
        const auto t = compute_T_poly(r);
        CHECK(t.homogeneous_weight() == r);
        CHECK(compute_T_poly(r, 987654321) == t);
        for (const auto& [m, c] : t.terms()) {
            if (r % 2 == 1) CHECK(m.contains(1));
            CHECK_FALSE(m.contains(3));
            CHECK_FALSE(m.contains(5));
            CHECK_FALSE(m.contains(7));
        }
    }
}

TEST_CASE("T polynomial agrees with pointwise T for other tuple sizes") {
    Sampler s(23);
    for (int r = 0; r <= 6; ++r) {
        const auto t = compute_T_poly(r);
        for (std::size_t m = 1; m <= 8; ++m) {
            const PointTuple x = s.rational_point(m, -7, 7, 3);
            CHECK(t.eval(power_sums(x, std::max(r, 1))) == eval_T_direct(static_cast<unsigned long>(r), x));
        }
    }
}
