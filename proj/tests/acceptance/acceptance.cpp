// End-to-end acceptance run. Prints one PASS/FAIL line per criterion;
// `acceptance N` runs criterion N alone. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lpzero/constants.hpp"
#include "lpzero/criteria.hpp"
#include "lpzero/polynomial.hpp"
#include "lpzero/verify.hpp"
#include "lpzero/zerocount.hpp"
#include "oracles.hpp"

using namespace lpzero;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream why;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) why << what;
            else why << "; " << what;
        }
        pass = pass && ok;
    }
};

SeriesFamily phi(double a) { return SeriesFamily::euler_f(a).alternate().normalize(); }

Outcome q_infinity_bracket() {
    Outcome o;
    const auto b = q_infinity(1e-6);
    o.why.precision(12);
    o.require(b.width() <= 1e-6, "bracket wider than 1e-6");
    o.require(b.lo <= 3.233636 && 3.233636 <= b.hi, "3.233636 not in bracket");
    o.why << (o.pass ? "" : " ") << "[" << b.lo << ", " << b.hi << "]";
    return o;
}

Outcome section_constants() {
    Outcome o;
    const Extended tol("1e-60");
    std::vector<BasicBracket<Extended>> c(16);
    for (int n = 2; n <= 15; ++n) c[n] = c_n_extended(n, tol);
    auto mid = [](const BasicBracket<Extended>& b) { return static_cast<double>((b.lo + b.hi) / 2); };
    o.require(std::abs(mid(c[2]) - 4.0) <= 1e-6, "c_2 off");
    o.require(std::abs(mid(c[3]) - 3.0) <= 1e-6, "c_3 off");
    // strict order is certified by disjoint brackets
    for (int n = 4; n <= 15; n += 2) o.require(c[n].hi < c[n - 2].lo, "even c_" + std::to_string(n) + " not below");
    for (int n = 5; n <= 15; n += 2) o.require(c[n].lo > c[n - 2].hi, "odd c_" + std::to_string(n) + " not above");
    const auto qi = q_infinity(1e-6);
    auto gap = [&qi](double x) { return x < qi.lo ? qi.lo - x : x > qi.hi ? x - qi.hi : 0.0; };
    o.require(gap(mid(c[14])) <= 5e-3, "c_14 far from q_inf");
    o.require(gap(mid(c[15])) <= 5e-3, "c_15 far from q_inf");
    o.why.precision(10);
    o.why << (o.pass ? "" : " ") << "c_14=" << mid(c[14]) << " c_15=" << mid(c[15]);
    return o;
}

Outcome threshold_roots() {
    Outcome o;
    for (const auto& r : thresholds()) {
        if (r.informational) continue;
        o.require(r.accepted, r.name + " deviates by " + std::to_string(r.deviation));
    }
    return o;
}

Outcome critical_parameter() {
    Outcome o;
    const auto c = critical_a(1e-5);
    o.require(c.bracket.width() <= 1e-5, "bracket wider than 1e-5");
    o.require(c.bracket.lo > 3.90145 && c.bracket.hi < 3.91729, "bracket outside [3.90145, 3.91729]");
    o.why.precision(10);
    o.why << " [" << c.bracket.lo << ", " << c.bracket.hi << "]";
    return o;
}

Outcome quadratic_minimum() {
    Outcome o;
    const double a_lo = (3 + std::sqrt(17.0)) / 2, a_hi = 2 + std::sqrt(7.0);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        const double a = a_lo + (a_hi - a_lo) * i / 20;  // q_2 in [3, 4)
        const auto m = min_modulus_on_circle(SeriesFamily::euler_f(a).alternate(), 2, a * a + 1);
        worst = std::max(worst, std::abs(m.numeric - 1.0));
    }
    o.require(worst <= 1e-8, "min |S_2| differs from 1 by " + std::to_string(worst));
    return o;
}

Outcome rho_counts() {
    Outcome o;
    for (double a : {3.7, 4.0, 4.3}) {
        for (int j = 4; j <= 10; ++j) {
            const double rho = rho_radius(phi(a), j);
            const auto w = count_zeros_in_disk(phi(a), rho);
            const std::string at = " (a=" + std::to_string(a) + ", j=" + std::to_string(j) + ")";
            o.require(w.certified && w.count == j, "winding count " + std::to_string(w.count) + at);

            // real roots from Sturm isolation, complex ones from the Aberth oracle
            const auto s = section_polynomial(phi(a), j + 8);
            const auto real = real_roots(s.poly, -1e12, 1e12);
            std::vector<long double> coeffs(s.poly.coeffs().begin(), s.poly.coeffs().end());
            const auto all = oracle::aberth(coeffs);
            int inside = 0, complex_count = 0;
            for (double r : real) inside += std::abs(r) < rho;
            for (const auto& z : all) {
                if (std::abs(z.imag()) > 1e-9L * std::max(1.0L, std::abs(z))) {
                    ++complex_count;
                    inside += std::abs(z) < rho;
                }
            }
            o.require(static_cast<int>(real.size()) + complex_count == j + 8, "root split mismatch" + at);
            o.require(inside == w.count, "section count " + std::to_string(inside) + at);
        }
    }
    return o;
}

Outcome two_zero_disk() {
    Outcome o;
    for (double a : {3.6, 4.0, 4.5}) {
        const double q2 = (a * a + 1) / (a + 1);
        const auto w = count_zeros_in_disk(phi(a), q2);
        o.require(w.certified && w.count == 2, "count " + std::to_string(w.count) + " at a=" + std::to_string(a));
        if (a * a - 4 * a - 3 < 0) {
            const double want = std::sqrt((a + 1) * (a * a + 1));
            o.require(std::abs(s2_root_modulus(a) - want) <= 1e-9, "root modulus at a=" + std::to_string(a));
        }
    }
    return o;
}

Outcome alternation() {
    Outcome o;
    const auto r = check_lemma6({3.0, 3.5, 4.0, 4.6}, 20);
    for (const auto& f : r.failures) o.require(false, f.inequality);
    o.require(r.inapplicable == 0, "grid point skipped");
    return o;
}

Outcome hutchinson_coherence() {
    Outcome o;
    const auto c5 = classify_Fa(5.0);
    o.require(c5.verdict == Verdict::InLP, "classify(5) = " + to_string(c5.verdict));
    for (int n = 1; n <= 12; ++n) {
        const auto s = section_polynomial(SeriesFamily::euler_f(5.0), n);
        o.require(is_real_rooted(s.poly), "section " + std::to_string(n) + " not real-rooted");
        const auto roots = real_roots(s.poly, -1e12, 1e12);
        o.require(static_cast<int>(roots.size()) == n, "section " + std::to_string(n) + " has repeated roots");
        for (double u : roots) o.require(u * s.z_per_u < 0, "nonnegative root in section " + std::to_string(n));
    }
    const auto c3 = classify_Fa(3.0);
    o.require(c3.verdict == Verdict::NotInLP && c3.criterion == "necessary_q2", "classify(3) = " +
                                                                                    to_string(c3.verdict) + " by " +
                                                                                    c3.criterion);
    o.require(std::abs(quotients(SeriesFamily::euler_f(3.0)).q(2) - 2.5) < 1e-15, "q_2(3) != 2.5");
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> ua(2.0, 6.0), ut(0.0, 2 * M_PI), uu(0.0, 1.0);
    int eval_bad = 0;
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng);
        const int fi = i % 3;
        SeriesFamily f = fi == 0 ? SeriesFamily::euler_f(a) : fi == 1 ? SeriesFamily::partial_theta(a) : SeriesFamily::euler_h(a);
        const std::complex<double> z = std::polar(a * a * a * uu(rng), ut(rng));
        const auto got = evaluate(f, z);
        const auto want = oracle::exact_series(static_cast<oracle::Family>(fi), a, z, false, false);
        const double slack = 2 * std::numeric_limits<double>::epsilon() * std::abs(want) +
                             2 * oracle::exact_series_dropped(static_cast<oracle::Family>(fi), a, std::abs(z), false);
        eval_bad += std::abs(got.value - want) > got.abs_error_bound + slack;
    }
    o.require(eval_bad == 0, std::to_string(eval_bad) + " evaluations outside their bound");

    std::uniform_int_distribution<int> deg(1, 12);
    std::uniform_real_distribution<double> ur(-4.0, 4.0);
    int roots_bad = 0;
    for (int t = 0; t < 200; ++t) {
        const int n = deg(rng);
        std::vector<double> planted;
        while (static_cast<int>(planted.size()) < n) {
            const double r = ur(rng);
            if (std::all_of(planted.begin(), planted.end(), [r](double s) { return std::abs(r - s) > 0.25; }))
                planted.push_back(r);
        }
        std::sort(planted.begin(), planted.end());
        const auto found = real_roots(RealPolynomial::from_roots(planted), -5, 5, 1e-12);
        bool ok = found.size() == planted.size();
        for (std::size_t k = 0; ok && k < found.size(); ++k) ok = std::abs(found[k] - planted[k]) <= 1e-9;
        roots_bad += !ok;
    }
    o.require(roots_bad == 0, std::to_string(roots_bad) + " root instances missed");

    o.require(!check_lemma2({3.0}, false).passed(), "fixture lemma2(a=3) passed");
    o.require(!check_rouche_gap({3.0}, false).passed(), "fixture rouche(a=3) passed");
    o.require(!check_lemma3_inequalities(2.0, 4, 10, false).passed(), "fixture lemma3(a=2) passed");
    return o;
}

struct Criterion {
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {"q_infinity bracket contains 3.233636", q_infinity_bracket},
        {"section constants c_2 = 4, c_3 = 3, alternating monotone to n = 15", section_constants},
        {"threshold polynomial roots", threshold_roots},
        {"critical parameter bracket inside [3.90145, 3.91729]", critical_parameter},
        {"min |S_2| = 1 on |z| = a^2 + 1", quadratic_minimum},
        {"j zeros inside rho_j, cross-checked on sections", rho_counts},
        {"two zeros in the first disk, S_2 root modulus", two_zero_disk},
        {"alternating signs at rho_k", alternation},
        {"Hutchinson coherence", hutchinson_coherence},
        {"oracle equivalence and expected-fail fixtures", oracle_equivalence},
    };
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty())
        for (int i = 1; i <= static_cast<int>(all.size()); ++i) which.push_back(i);

    int failed = 0;
    for (int id : which) {
        if (id < 1 || id > static_cast<int>(all.size())) {
            std::fprintf(stderr, "no criterion %d\n", id);
            return 2;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = all[id - 1].run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %2d: %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, all[id - 1].title, s,
                    o.why.str().empty() ? "" : " : ", o.why.str().c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed;
}
