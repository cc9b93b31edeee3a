#include <doctest.h>

#include <cmath>

#include "lpzero/verify.hpp"

using namespace lpzero;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
    return v;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("quadratic section on the circle") {
    const auto r = check_lemma2({4.0, 3.5616, 5.0});
    CHECK(r.passed());
    CHECK(r.inapplicable == 1);
    CHECK(check_lemma2(linspace(3.57, 4.6, 20)).passed());
}

TEST_CASE("tail gap on the circle") {
    const auto r = check_rouche_gap({4.0, 3.5616, 3.0});
    CHECK(r.passed());
    CHECK(r.inapplicable == 1);
    CHECK(r.worst_margin > 0);
}

TEST_CASE("Rouche inequalities on rho_j") {
    CHECK(check_lemma3_inequalities(4.0, 6, 12).passed());
    CHECK(check_lemma3_inequalities(3.57, 10, 10).passed());
    CHECK(check_lemma3_inequalities(4.6, 4, 40).passed());
    CHECK(check_lemma3_inequalities(2.0, 4, 10).inapplicable > 0);
}

TEST_CASE("alternation at rho_k") {
    CHECK(check_lemma6({4.0}, 15).passed());
    CHECK(check_lemma6({3.0}, 10).passed());
    CHECK(check_lemma6({3.0, 3.5, 4.0, 4.6}, 20).passed());
    const auto out = check_lemma6({2.0}, 5);
    CHECK(out.inapplicable > 0);
    CHECK(out.inequalities == 0);
}

TEST_CASE("positivity before the first sign change") {
    CHECK(check_positivity_interval({4.0}, {2, 3, 4, 5, 6, 7, 8}).passed());
    CHECK(check_positivity_interval(linspace(3.6, 4.6, 5), {2, 5, 8}).passed());
}

TEST_CASE("cubic-section algebra") {
    CHECK(check_lemma4_algebra(50, 1).passed());
    const auto r = check_lemma4_algebra_at({3.90155, 4.2, 3.7});
    CHECK(r.passed());
}

TEST_CASE("expected failures outside the hypotheses") {
    CHECK_FALSE(check_lemma2({3.0}, false).passed());
    CHECK_FALSE(check_rouche_gap({3.0}, false).passed());
    CHECK_FALSE(check_lemma3_inequalities(2.0, 4, 10, false).passed());
    const auto f = check_rouche_gap({3.0}, false);
    REQUIRE_FALSE(f.failures.empty());
    CHECK_FALSE(f.failures.front().params.empty());
}

}
