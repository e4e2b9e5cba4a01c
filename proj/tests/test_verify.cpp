#include "sympoly/partfunc.hpp"
#include "sympoly/pcore.hpp"
#include "sympoly/trec.hpp"
#include "sympoly/verify.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace sympoly;
using sympoly::testing::pt;
using sympoly::testing::Q;

TEST_CASE("conjecture1 up to r = 7") {
    const auto report = verify_conjecture1(7, 42);
    CHECK(report.passed());
    CHECK(report.total() == 6);
    CHECK(report.params()["by_r"].size() == 6);
    // r = 1 lies outside the stated range but holds as well.
    CHECK(compute_T_poly(1) == flip_even_signs(compute_f_poly(1)));
    CHECK_THROWS_AS(verify_conjecture1(1, 42), std::domain_error);
}

TEST_CASE("conjecture2 examples") {
    const auto m4 = verify_conjecture2(4, 42, 10);
    CHECK(m4.passed());
    CHECK(m4.total() == 20);
    CHECK(verify_conjecture2(6, 42, 10).passed());
    const auto m2 = verify_conjecture2(2, 42, 10);
    CHECK(m2.passed());
    CHECK(m2.params()["by_n"].size() == 1);
}

TEST_CASE("ratio bounds") {
    for (int r = 2; r <= 7; ++r) {
        const auto [lo, hi] = ratio_bounds(r, 1);
        CHECK(lo == hi);
        CHECK(lo == Q(1L << r, r + 1));
    }
    // Equal coordinates sit exactly on the r = 2 lower edge.
    const auto [lo2, hi2] = ratio_bounds(2, 2);
    CHECK(lo2 == Q(7, 6));
    CHECK(hi2 == Q(4, 3));
    const Rational t1 = eval_T_direct(1, pt({1, 1}));
    CHECK(eval_T_direct(2, pt({1, 1})) / (t1 * t1) == lo2);
    const auto [lo3, hi3] = ratio_bounds(3, 3);
    CHECK(lo3 == Q(4, 3));
    CHECK(hi3 == 2);
    CHECK_THROWS_AS(ratio_bounds(8, 2), std::domain_error);
}

TEST_CASE("verify_bounds") {
    CHECK(verify_bounds(7, 1, 42, 20).passed());
    CHECK(verify_bounds(2, 2, 42, 50).passed());
    CHECK(verify_bounds(7, 3, 42, 50).passed());
    CHECK_THROWS_AS(verify_bounds(8, 2, 42, 10), std::domain_error);
}

TEST_CASE("power-sum relation examples") {
    // m = 2, x = (1, 2): E3 = (3*5 - 9)*3/2 = 9.
    const Rational E1 = 3, E2 = 5;
    CHECK(Rational((3 * E2 - E1 * E1) * E1 / 2) == 9);
    CHECK(verify_power_sum_relations(1, 42, 50).passed());
    CHECK(verify_power_sum_relations(2, 42, 50).passed());
    CHECK_THROWS_AS(verify_power_sum_relations(4, 42, 10), std::domain_error);
}

TEST_CASE("printed sixth-power relation for three variables is off by E2^3/12") {
    const auto report = verify_power_sum_relations(3, 42, 50);
    std::size_t e6 = 0;
    for (const auto& f : report.failures()) {
        CHECK(f.inputs["k"] == 6);
        ++e6;
    }
    CHECK(e6 > 0);
    // x = (1, 1, 1): printed form gives 3/4 where E6 = 3; the gap is E2^3/12 = 27/12.
    CHECK(Q(3) - Q(3, 4) == Q(27, 12));
}

TEST_CASE("lemma batteries") {
    CHECK(eval_P(5, pt({1, 2, 0})) == 0);
    CHECK(eval_P(5, pt({3, -3})) == 0);
    CHECK(eval_P(6, pt({1, 1, 2})) > 0);
    for (const auto& report : verify_lemmas(10, 6, 42, 60)) CHECK_MESSAGE(report.passed(), report.summary());
}

TEST_CASE("reports are deterministic and self-consistent") {
    const auto a = verify_bounds(5, 4, 7, 30).to_json().dump();
    const auto b = verify_bounds(5, 4, 7, 30).to_json().dump();
    CHECK(a == b);
    const auto rel = verify_power_sum_relations(3, 1, 10);
    CHECK(rel.total() >= rel.failures().size());
    CHECK(std::string(rel.status()) == (rel.failures().empty() ? "pass" : "fail"));
    const auto json = rel.to_json();
    CHECK(json["claim"] == "relations");
    CHECK(json["failures"][0].contains("inputs"));
    CHECK(json["failures"][0]["inputs"].contains("x"));
}

TEST_CASE("parity suite") {
    const auto reports = verify_parity_suite(10, 10, 5, 42);
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) CHECK(r.passed());
    CHECK(reports[0].total() == 100);
}
