#pragma once

// Bisection solvers for the critical constants and the threshold roots.
//
// Each bisection first probes its predicate on 32 equally spaced points and
// refuses to run (MonotonicityError) unless the probe reads
// false...false true...true.

#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "lpzero/criteria.hpp"

namespace lpzero {

/// 100 significant decimal digits.
using Extended = boost::multiprecision::mpfr_float_100;

template <class Real>
struct BasicBracket {
    Real lo;
    Real hi;
    /// Name of the boolean test that is false at lo and true at hi.
    std::string predicate;
    int evaluations = 0;
    int iterations = 0;
    /// True when the predicate switches from false to true as the parameter grows.
    bool rising = true;
    std::string label;

    Real width() const { return hi - lo; }
    Real midpoint() const { return lo + (hi - lo) / 2; }
};

using Bracket = BasicBracket<double>;

inline constexpr int kBisectionCap = 60;
inline constexpr int kExtendedBisectionCap = 400;
/// Largest section degree c_n accepts.
inline constexpr int kMaxSectionConstant = 15;

/// Bracket for q_inf over s = a^2 in [3, 4]. Predicate: the minimum of
/// g_a(-x) over (a, a^3) is certified negative. tol >= 1e-10.
Bracket q_infinity(double tol = 1e-6);

/// Bracket for c_n over s in [2.5, 4.5] with the section S_n in place of
/// g_a. 2 <= n <= max_n.
Bracket c_n(int n, double tol = 1e-6, int max_n = kMaxSectionConstant);

/// The same two solvers in 100-digit arithmetic; tol may go down to 1e-90.
BasicBracket<Extended> q_infinity_extended(const Extended& tol);
BasicBracket<Extended> c_n_extended(int n, const Extended& tol, int max_n = kMaxSectionConstant);

std::string to_decimal(const Extended& x, int digits = 50);

struct CriticalEstimate {
    Bracket bracket;
    /// bracket.lo >= 3.90155 - 1e-4.
    bool consistent_with_lower_bound = false;
    /// bracket inside [3.90155 - 1e-4, 3.91719 + 1e-4].
    bool within_reference_bracket = false;
};

/// Non-rigorous estimate of the smallest a with F_a in the class: bisection
/// on a in [3.9, 4.0] with predicate sign_test_Fa(a) == InLP. tol >= 1e-8.
CriticalEstimate critical_a(double tol = 1e-5);

struct ThresholdRow {
    std::string name;
    std::string polynomial;
    double computed = 0.0;
    double reference = 0.0;
    double deviation = 0.0;
    /// "abs_deviation<=1e-4" or "root<=reference".
    std::string acceptance;
    bool accepted = false;
    /// Extra rows that are reported but not part of the acceptance set.
    bool informational = false;
};

/// Threshold roots recomputed by Sturm isolation, next to their reference
/// values.
std::vector<ThresholdRow> thresholds();

struct ScanRow {
    double a = 0.0;
    double min_value = 0.0;
    Verdict verdict = Verdict::Inapplicable;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    /// Changes between consecutive decided (non-Boundary) verdicts.
    int transitions = 0;
    /// At most one transition, and it goes NotInLP -> InLP.
    bool monotone = true;
};

/// sign_test_Fa on steps equally spaced a in [a_lo, a_hi]. Observational.
ScanResult conjecture_scan(double a_lo, double a_hi, int steps);

}  // namespace lpzero
