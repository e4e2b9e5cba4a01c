#include "sympoly/partfunc.hpp"
#include "sympoly/sampling.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <vector>

using namespace sympoly;
using sympoly::testing::pt;
using sympoly::testing::Q;

TEST_CASE("eval_f examples") {
    CHECK(eval_f(1, pt({1, 2, 3})) == 3);
    CHECK(eval_f(2, pt({1, 1})) == Q(5, 6));
    CHECK(eval_f(0, pt({7})) == 1);
}

TEST_CASE("property: eval_f matches the literal multinomial expansion") {
    Sampler s(31);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = static_cast<std::size_t>(s.integer(1, 4));
        const auto r = static_cast<unsigned long>(s.integer(0, 7));
        const PointTuple d = s.rational_point(m, -9, 9, 3);
        CHECK(eval_f(r, d) == sympoly::testing::oracle_f_multinomial(r, d));
    }
}

TEST_CASE("independent umbrae are required to reproduce f_2") {
    // One shared umbra would turn (B d_i)(B d_j) into B_2 d_i d_j, giving
    // sigma_1^2 (1 + 2 B_1 + B_2) = sigma_1^2 / 6 instead of (3 sigma_1^2 - sigma_2)/12.
    const PointTuple d = pt({2, 5});
    const Rational sigma1 = sum(d);
    const Rational shared = sigma1 * sigma1 * (1 + 2 * bernoulli(1) + bernoulli(2));
    CHECK(shared != eval_f(2, d));
    CHECK(eval_f(2, d) == (3 * sigma1 * sigma1 - Rational(29)) / 12);
}

TEST_CASE("compute_f_poly reproduces the published table") {
    const auto table = sympoly::testing::published_f();
    for (int r = 0; r <= 7; ++r) CHECK_MESSAGE(compute_f_poly(r) == table[static_cast<std::size_t>(r)], "r=" << r);
    CHECK(compute_f_poly(2).to_json(Family::Sigma).dump() == R"({"s1^2":"1/4","s2":"-1/12"})");
    CHECK(compute_f_poly(4).to_json(Family::Sigma).dump() == R"({"s1^4":"1/16","s1^2*s2":"-1/8","s2^2":"1/48","s4":"1/120"})");
    CHECK(compute_f_poly(0) == PowerSumPoly::constant(1));
    const auto f3 = interpolate_powersum([](std::span<const Rational> d) { return eval_f(3, d); }, 3, 5);
    CHECK(f3.to_json(Family::Sigma).dump() == R"({"s1^3":"1/8","s1*s2":"-1/8"})");
}

TEST_CASE("compute_f_poly has no odd power sums beyond sigma_1") {
    for (int r = 0; r <= 9; ++r) {
        const auto f = compute_f_poly(r);
        for (const auto& [m, c] : f.terms()) {
            CHECK_FALSE(m.contains(3));
            CHECK_FALSE(m.contains(5));
            CHECK_FALSE(m.contains(7));
            CHECK_FALSE(m.contains(9));
        }
    }
}

TEST_CASE("eval_W1 examples and domain") {
    CHECK(eval_W1(Q(0), pt({5})) == Q(1, 5));
    CHECK(eval_W1(Q(123, 7), pt({5})) == Q(1, 5));
    CHECK(eval_W1(Q(4), pt({1, 1})) == 5);
    CHECK(eval_W1(Q(3), pt({1, 1, 1})) == 10);
    CHECK_THROWS_AS(eval_W1(Q(1), pt({0, 2})), std::domain_error);
    CHECK_THROWS_AS(eval_W1(Q(1), PointTuple{Q(3, 2)}), std::domain_error);
    CHECK_THROWS_AS(eval_W1(Q(1), PointTuple{}), std::domain_error);
}

TEST_CASE("count_partitions_brute examples") {
    CHECK(count_partitions_brute(4, pt({1, 2})) == 3);
    CHECK(count_partitions_brute(0, pt({3, 8})) == 1);
    CHECK(count_partitions_brute(3, pt({2, 4})) == 0);
    CHECK(count_partitions_brute(100, pt({1, 5, 10, 25, 50})) == 292);
    CHECK_THROWS_AS(count_partitions_brute(3, pt({-1})), std::domain_error);
}

TEST_CASE("check_parity examples") {
    CHECK(check_parity(pt({1, 2}), std::vector<Rational>{Q(0), Q(1), Q(5, 2)}).passed());
    CHECK(check_parity(pt({3}), std::vector<Rational>{Q(0), Q(7)}).passed());
    const auto r = check_parity(pt({1, 1, 1}), std::vector<Rational>{Q(1), Q(2), Q(3)});
    CHECK(r.passed());
    CHECK(r.total() == 3);
}

TEST_CASE("W_1 recursion in the last generator") {
    Sampler s(33);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = static_cast<std::size_t>(s.integer(2, 5));
        const PointTuple d = s.integer_point(m, 1, 9);
        std::vector<Rational> s_values;
        for (int i = 0; i < 10; ++i) s_values.push_back(s.rational(-40, 40, 4));
        CHECK(check_recursion(d, s_values).passed());
    }
    CHECK_THROWS_AS(check_recursion(pt({3}), std::vector<Rational>{Q(1)}), std::domain_error);
}

TEST_CASE("unit generators: polynomial part is exact") {
    for (unsigned m = 1; m <= 4; ++m) CHECK(check_unit_generators(m, 50).passed());
}

TEST_CASE("proximity: bounded, non-drifting gap for coprime generators") {
    for (const auto& d : {pt({1, 2}), pt({2, 3}), pt({3, 5, 7})}) {
        const auto profile = proximity_profile(d);
        CHECK(profile.stable);
        CHECK(profile.block_max.size() == 3);
        CHECK(check_proximity(d).passed());
    }
    // W(s) - W_1(s) for (1, 2) alternates between 1/4 and -1/4.
    CHECK(proximity_profile(pt({1, 2})).bound == Q(1, 4));
    // A shared factor between generators introduces a growing wave.
    CHECK_FALSE(proximity_profile(pt({2, 4})).stable);
}

TEST_CASE("f satisfies the low-order ratio identities") {
    Sampler s(35);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = static_cast<std::size_t>(s.integer(1, 6));
        const PointTuple d = s.rational_point(m, 1, 30, 4);
        const auto f = eval_f_upto(7, d);
        const Rational& f1 = f[1];
        REQUIRE(f1 != 0);
        auto a = [&](unsigned long j) { return Rational(f[j] / pow(f1, j)); };
        CHECK(a(3) == 3 * a(2) - 2);
        CHECK(a(5) == 5 * a(4) - 20 * a(2) + 16);
        CHECK(a(7) == 7 * a(6) - 70 * a(4) + 336 * a(2) - 272);
    }
}
