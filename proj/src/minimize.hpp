#pragma once

// Grid scan plus golden-section refinement over the interior of an interval.
// Shared by the sign tests and the constant solvers; generic in the real type
// so the same search runs in binary64 and in extended precision.

#include <cmath>
#include <limits>

#include "lpzero/series.hpp"

namespace lpzero::detail {

template <class Real>
struct IntervalMinimum {
    Real x;
    Real value;
    Real error_bound;
    int evaluations = 0;
};

/// f maps Real -> RealValue<Real>. Only points strictly inside (lo, hi) are
/// evaluated. The golden-section stage stops when the bracket is narrower
/// than x_tol.
template <class Real, class F>
IntervalMinimum<Real> minimize_interior(F&& f, const Real& lo, const Real& hi, int grid, const Real& x_tol) {
    const Real h = (hi - lo) / grid;
    IntervalMinimum<Real> best{lo, Real(std::numeric_limits<double>::infinity()), Real(0), 0};
    int best_i = 1;
    for (int i = 1; i < grid; ++i) {
        const Real x = lo + h * i;
        const RealValue<Real> v = f(x);
        ++best.evaluations;
        if (v.value < best.value) {
            best.x = x;
            best.value = v.value;
            best.error_bound = v.abs_error_bound;
            best_i = i;
        }
    }

    using std::sqrt;
    const Real phi = (sqrt(Real(5)) - Real(1)) / Real(2);
    Real a = lo + h * (best_i - 1);
    Real b = lo + h * (best_i + 1);
    Real x1 = b - phi * (b - a);
    Real x2 = a + phi * (b - a);
    RealValue<Real> f1 = f(x1);
    RealValue<Real> f2 = f(x2);
    best.evaluations += 2;
    for (int it = 0; it < 600 && b - a > x_tol; ++it) {
        if (f1.value < f2.value) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
        ++best.evaluations;
    }
    for (const auto& [x, v] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
        if (v.value < best.value) {
            best.x = x;
            best.value = v.value;
            best.error_bound = v.abs_error_bound;
        }
    }
    return best;
}

}  // namespace lpzero::detail
