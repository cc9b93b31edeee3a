#include <doctest.h>

#include <cmath>
#include <random>

#include "lpzero/criteria.hpp"
#include "oracles.hpp"

using namespace lpzero;

TEST_SUITE("criteria") {

TEST_CASE("hutchinson") {
    const auto b = hutchinson_test(SeriesFamily::euler_f(2 + std::sqrt(7.0)));
    CHECK(b.verdict == Verdict::Boundary);
    CHECK(std::abs(b.margin) < 1e-12);
    CHECK(hutchinson_test(SeriesFamily::euler_f(5)).verdict == Verdict::InLP);
    CHECK(hutchinson_test(SeriesFamily::partial_theta(2)).verdict == Verdict::InLP);
    CHECK(hutchinson_test(SeriesFamily::euler_f(4)).verdict == Verdict::Inapplicable);
    CHECK_FALSE(hutchinson_test(SeriesFamily::euler_f(5)).witness_x.has_value());
}

TEST_CASE("necessary q_2 condition") {
    const auto r3 = necessary_q2(SeriesFamily::euler_f(3));
    CHECK(r3.verdict == Verdict::NotInLP);
    CHECK(r3.margin == doctest::Approx(-0.5));
    CHECK(necessary_q2(SeriesFamily::euler_f((3 + std::sqrt(17.0)) / 2)).verdict == Verdict::Boundary);
    CHECK(necessary_q2(SeriesFamily::euler_f(4)).verdict == Verdict::Inapplicable);
    CHECK_THROWS_AS(necessary_q2(SeriesFamily::euler_h(3)), PreconditionError);
}

TEST_CASE("sign test for F_a against a brute-force minimum") {
    for (double a : {3.7, 3.9016, 3.9171, 3.95, 3.97, 4.2}) {
        const auto r = sign_test_Fa(a);
        REQUIRE(r.witness_value.has_value());
        const auto bm = oracle::brute_minimize([a](long double x) { return oracle::direct_Fa_minus(a, x); }, a + 1,
                                               a * a + 1);
        INFO("a=" << a);
        CHECK(std::abs(*r.witness_value - static_cast<double>(bm.value)) < 1e-9);
        const Verdict expect = bm.value < 0 ? Verdict::InLP : Verdict::NotInLP;
        CHECK(r.verdict == expect);
    }
    CHECK(sign_test_Fa(4.2).verdict == Verdict::InLP);
    CHECK(sign_test_Fa(3.7).verdict == Verdict::NotInLP);
}

TEST_CASE("sign test for g_a") {
    CHECK(sign_test_theta(2).verdict == Verdict::InLP);
    CHECK(sign_test_theta(std::sqrt(3.0)).verdict == Verdict::NotInLP);
    const auto sec = sign_test_theta(2, 2);
    CHECK(sec.verdict == Verdict::Boundary);
    CHECK(sec.criterion == "sign_test_theta_section");
    const double a = std::sqrt(3.5);
    const auto bm =
        oracle::brute_minimize([a](long double x) { return oracle::direct_theta_minus(a, x); }, a, a * a * a);
    CHECK(std::abs(*sign_test_theta(a).witness_value - static_cast<double>(bm.value)) < 1e-9);
}

TEST_CASE("cubic-section threshold") {
    CHECK(std::abs(lemma4_threshold() - 3.90155) < 1e-4);
    CHECK(lemma4::octic()(lemma4_threshold()) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("sixth-section test") {
    // below the product-form root S_6(z_0) is still positive
    const auto r = lemma5_test(3.91719);
    CHECK(r.verdict == Verdict::Inapplicable);
    CHECK(r.margin > 0);
    CHECK(lemma5_test(4.5).verdict == Verdict::InLP);
    CHECK(lemma5_test(3.5).verdict == Verdict::Inapplicable);
}

TEST_CASE("sixth-section closed form against the direct section sum") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ua(3.0, 5.0);
    for (int i = 0; i < 30; ++i) {
        const double a = ua(rng);
        const double q2 = (a * a + 1) / (a + 1);
        const double z0 = 2.0 / 3.0 * (a + 1) * q2;
        const double direct = evaluate_section(SeriesFamily::euler_f(a).alternate(), 6, {z0, 0}).real();
        // exact rational oracle for the same section
        const double exact = oracle::exact_series(oracle::Family::EulerF, a, {z0, 0}, true, false, 7).real();
        const double closed = lemma5::closed_form(a);
        INFO("a=" << a);
        CHECK(std::abs(closed - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
        CHECK(std::abs(direct - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("classification cascade") {
    const auto c3 = classify_Fa(3.0);
    CHECK(c3.verdict == Verdict::NotInLP);
    CHECK(c3.criterion == "necessary_q2");
    const auto c5 = classify_Fa(5.0);
    CHECK(c5.verdict == Verdict::InLP);
    CHECK(c5.criterion == "hutchinson_test");
    // 3.95 lies below the crossing of the sign test near 3.9642
    const auto c395 = classify_Fa(3.95);
    CHECK(c395.verdict == Verdict::NotInLP);
    CHECK(c395.criterion == "sign_test_Fa");
    CHECK(classify_Fa(4.0).verdict == Verdict::InLP);
}

TEST_CASE("classification agrees with the sign test") {
    const double crit = 3.96423;
    for (int i = 0; i < 50; ++i) {
        const double a = 3.6 + 1.0 * (i + 0.5) / 50;
        if (std::abs(a - crit) < 1e-3) continue;
        const auto c = classify_Fa(a);
        const auto s = sign_test_Fa(a);
        INFO("a=" << a);
        CHECK(c.verdict == s.verdict);
        if (lemma5_test(a).verdict == Verdict::InLP) CHECK(s.verdict == Verdict::InLP);
        if (s.verdict == Verdict::InLP) CHECK(a >= lemma4_threshold() - 1e-4);
    }
}

}
