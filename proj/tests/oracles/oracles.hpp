#pragma once

// Reference implementations used only by the tests. Nothing here calls into
// the library's evaluation or root-finding code.

#include <complex>
#include <vector>

namespace oracle {

enum class Family { EulerF, Theta, EulerH };

// Exact rational sum of the first `terms` terms at z (doubles are exact
// rationals), rounded once to double at the end. The variable is -z when
// alternating and u*(a_0/a_1) when normalized.
std::complex<double> exact_series(Family f, double a, std::complex<double> z, bool alternating, bool normalized,
                                  int terms = 60);

// Largest |term| dropped by exact_series, as a bound on its truncation.
double exact_series_dropped(Family f, double a, double r, bool normalized, int terms = 60);

// All complex roots of sum c_k x^k (ascending) by Aberth-Ehrlich in long double.
std::vector<std::complex<long double>> aberth(const std::vector<long double>& ascending, int max_iter = 2000);

// Plain Horner sum of the degree-n (or full, n < 0) series of F_a(-x) or
// g_a(-x) in long double.
long double direct_Fa_minus(long double a, long double x, int n = -1);
long double direct_theta_minus(long double a, long double x, int n = -1);

struct BruteMin {
    long double x;
    long double value;
};

// Dense scan of the open interval with `points` interior samples followed by
// ternary refinement of the best cell.
template <class F>
BruteMin brute_minimize(F&& f, long double lo, long double hi, int points = 20000) {
    BruteMin best{lo, f(lo + (hi - lo) / (points + 1))};
    int best_i = 1;
    for (int i = 1; i <= points; ++i) {
        const long double x = lo + (hi - lo) * i / (points + 1);
        const long double v = f(x);
        if (v < best.value) best = {x, v}, best_i = i;
    }
    long double l = lo + (hi - lo) * (best_i - 1) / (points + 1);
    long double r = lo + (hi - lo) * (best_i + 1) / (points + 1);
    for (int it = 0; it < 200; ++it) {
        const long double m1 = l + (r - l) / 3, m2 = r - (r - l) / 3;
        if (f(m1) < f(m2)) r = m2; else l = m1;
    }
    const long double x = (l + r) / 2;
    const long double v = f(x);
    if (v < best.value) best = {x, v};
    return best;
}

}  // namespace oracle

namespace oracle {

// b^2 - 4ac over exact rationals, rounded to double (sign is exact).
double exact_discriminant(double a, double b, double c);

}  // namespace oracle
