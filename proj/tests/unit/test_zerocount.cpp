#include <doctest.h>

#include <cmath>

#include "lpzero/polynomial.hpp"
#include "lpzero/zerocount.hpp"
#include "oracles.hpp"

using namespace lpzero;

namespace {

SeriesFamily phi(double a) { return SeriesFamily::euler_f(a).alternate().normalize(); }

double q2_of(double a) { return (a * a + 1) / (a + 1); }

}  // namespace

TEST_SUITE("zerocount") {

TEST_CASE("rho radii") {
    CHECK(rho_radius(phi(4), 2) == doctest::Approx(3.4 * std::sqrt(65.0 / 17.0)).epsilon(1e-13));
    CHECK(rho_radius(phi(4), 3) == doctest::Approx(3.4 * (65.0 / 17.0) * std::sqrt(257.0 / 65.0)).epsilon(1e-13));
    CHECK(rho_radius(SeriesFamily::partial_theta(2).alternate().normalize(), 2) == doctest::Approx(8.0));
    CHECK(rho_radius(phi(4), 1) == doctest::Approx(std::sqrt(3.4)));
    for (double a : {3.7, 4.3}) {
        for (int j = 1; j < 15; ++j) CHECK(rho_radius(phi(a), j) < rho_radius(phi(a), j + 1));
    }
    CHECK_THROWS_AS(rho_radius(phi(4), 0), ParameterDomainError);
    CHECK_THROWS_AS(rho_radius(SeriesFamily::custom({0.0, -1.0}), 3), InsufficientDataError);
}

TEST_CASE("j zeros inside rho_j") {
    for (double a : {3.7, 4.0, 4.3, 4.6}) {
        for (int j = 4; j <= 10; ++j) {
            const auto w = count_zeros_in_disk(phi(a), rho_radius(phi(a), j));
            INFO("a=" << a << " j=" << j);
            CHECK(w.certified);
            CHECK(w.residual < 0.05);
            CHECK(w.count == j);
        }
    }
}

TEST_CASE("section roots agree with the winding counts") {
    for (double a : {3.7, 4.0, 4.3, 4.6}) {
        for (int j = 4; j <= 10; ++j) {
            const auto s = section_polynomial(phi(a), j + 8);
            std::vector<long double> c(s.poly.coeffs().begin(), s.poly.coeffs().end());
            const double rho = rho_radius(phi(a), j);
            int inside = 0;
            for (const auto& z : oracle::aberth(c)) inside += std::abs(z) < rho;
            INFO("a=" << a << " j=" << j);
            CHECK(inside == j);
        }
    }
}

TEST_CASE("two zeros in the disk |u| < q_2") {
    for (double a : {3.6, 4.0, 4.5}) {
        const auto w = count_zeros_in_disk(phi(a), q2_of(a));
        CHECK(w.certified);
        CHECK(w.count == 2);
    }
}

TEST_CASE("constant function") {
    const auto w = count_zeros_in_disk(SeriesFamily::constant_one(), 5.0);
    CHECK(w.count == 0);
    CHECK(w.certified);
    const auto m = min_modulus_on_circle(SeriesFamily::constant_one(), std::nullopt, 3.0);
    CHECK(m.value == doctest::Approx(1.0));
}

TEST_CASE("quadratic section minimum on the circle") {
    const auto f4 = min_modulus_on_circle(SeriesFamily::euler_f(4).alternate(), 2, 17.0);
    CHECK(f4.value == doctest::Approx(1.0).epsilon(1e-10));
    const double a = 3.6;
    const auto f36 = min_modulus_on_circle(SeriesFamily::euler_f(a).alternate(), 2, a * a + 1);
    CHECK(f36.value == doctest::Approx(1.0).epsilon(1e-10));
    // closed form against the grid, q_2 across [3, 4)
    const double a_lo = (3 + std::sqrt(17.0)) / 2, a_hi = 2 + std::sqrt(7.0);
    for (int i = 0; i < 20; ++i) {
        const double ai = a_lo + (a_hi - a_lo) * (i + 0.5) / 20;
        const auto m = min_modulus_on_circle(phi(ai), 2, q2_of(ai));
        REQUIRE(m.analytic.has_value());
        CHECK(std::abs(m.numeric - *m.analytic) < 1e-10);
    }
}

TEST_CASE("root modulus of the quadratic section") {
    CHECK(s2_root_modulus(4) == doctest::Approx(std::sqrt(85.0)).epsilon(1e-14));
    // direct quadratic: 1 + z/(a+1) + z^2/((a+1)(a^2+1)), complex roots have |z|^2 = c0/c2
    const double a = 3.6;
    const double c1 = 1 / (a + 1), c2 = 1 / ((a + 1) * (a * a + 1));
    REQUIRE(c1 * c1 - 4 * c2 < 0);
    CHECK(s2_root_modulus(a) == doctest::Approx(std::sqrt(1 / c2)).epsilon(1e-14));
    CHECK(s2_root_modulus(a) == doctest::Approx(8.0137).epsilon(1e-4));
    CHECK_THROWS_AS(s2_root_modulus(5), RealRootsError);
}

}
