#pragma once

// Taylor-coefficient generators for the entire functions studied here, with
// overflow-safe evaluation and certified truncation bounds.
//
// Coefficients are never formed directly: a_k for F_a behaves like
// a^{-k(k+1)/2} and underflows binary64 long before the series is useful.
// Everything is driven by the term ratio a_k / a_{k-1}; standalone
// coefficients are only exposed as logarithms.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "lpzero/errors.hpp"

namespace lpzero {

enum class FamilyKind {
    EulerF,        ///< F_a(z)  = sum z^k / prod_{j<=k} (a^j + 1)
    PartialTheta,  ///< g_a(z)  = sum z^k a^{-k^2}
    EulerH,        ///< h_a(z)  = sum z^k / prod_{j<=k} (a^j - 1)
    Custom,        ///< finite polynomial given by log-coefficients
};

std::string to_string(FamilyKind kind);

struct SeriesFamily {
    FamilyKind kind = FamilyKind::EulerF;
    double a = 2.0;
    /// ln a_k for k = 0..degree; Custom only.
    std::vector<double> custom_log_coeffs;
    /// Evaluate f(-z) instead of f(z).
    bool alternating = false;
    /// Rescale so that a_0 = a_1 = 1, i.e. work in u = z * a_1 / a_0.
    bool normalized = false;

    static SeriesFamily euler_f(double a);
    static SeriesFamily partial_theta(double a);
    static SeriesFamily euler_h(double a);
    static SeriesFamily custom(std::vector<double> log_coeffs);
    /// The constant function 1.
    static SeriesFamily constant_one();

    SeriesFamily alternate(bool on = true) const;
    SeriesFamily normalize(bool on = true) const;

    /// Throws ParameterDomainError for a <= 1 (named kinds), empty or
    /// non-finite custom data, or normalization without a linear term.
    void validate() const;

    bool is_polynomial() const { return kind == FamilyKind::Custom; }
    /// Degree for Custom; -1 for the infinite named families.
    int polynomial_degree() const;
};

/// ln(a_k / a_{k-1}) for k >= 1, normalization included. Returns -inf past
/// the end of a Custom polynomial.
double log_ratio(const SeriesFamily& family, int k);

/// a_k / a_{k-1} for k >= 1, normalization included, sign convention excluded.
double coefficient_ratio(const SeriesFamily& family, int k);

/// ln(a_k), accumulated from the ratios.
double coefficient_log(const SeriesFamily& family, int k);

/// Value of a truncated or full series evaluation.
struct EvalResult {
    std::complex<double> value;
    /// Tail majorant plus accumulated rounding.
    double abs_error_bound = 0.0;
    int terms_used = 0;
    double truncation_bound = 0.0;
    double rounding_bound = 0.0;
};

class TruncationError : public Error {
public:
    TruncationError(const std::string& what, EvalResult partial)
        : Error(what), partial_(partial) {}
    const char* kind() const noexcept override { return "truncation_failure"; }
    const EvalResult& partial() const noexcept { return partial_; }

private:
    EvalResult partial_;
};

inline constexpr int kMaxSeriesTerms = 10000;

/// Sums the series at z until the geometric majorant of the remaining tail
/// drops below rel_tol * max(1, |partial sum|).
EvalResult evaluate(const SeriesFamily& family, std::complex<double> z, double rel_tol = 1e-15);

/// Exact (up to rounding) sum of the terms k = 0..n.
std::complex<double> evaluate_section(const SeriesFamily& family, int n, std::complex<double> z);

/// Section value together with a rounding bound.
EvalResult evaluate_section_bounded(const SeriesFamily& family, int n, std::complex<double> z);

/// Upper bound on sum_{k >= start_index} a_k r^k: first term times the
/// geometric series in the first neglected ratio r * a_{start+1} / a_start.
double tail_bound(const SeriesFamily& family, int start_index, double r);

enum class Monotonicity { Increasing, Decreasing, Constant, Unknown };

/// The quotients p_n = a_{n-1}/a_n and q_n = p_n / p_{n-1} of a family.
class QuotientView {
public:
    explicit QuotientView(SeriesFamily family);

    const SeriesFamily& family() const noexcept { return family_; }
    double p(int n) const;
    double q(int n) const;
    double log_q(int n) const;
    /// Largest n for which q(n) is defined (Custom), otherwise INT_MAX.
    int max_index() const;
    std::optional<double> limit() const;
    Monotonicity monotonicity() const;

private:
    SeriesFamily family_;
};

/// Throws InsufficientDataError for a Custom family with fewer than 3
/// coefficients.
QuotientView quotients(const SeriesFamily& family);

// ---------------------------------------------------------------------------
// Real-axis kernels, generic in the arithmetic type. These back the sign
// tests and the critical-constant solvers; instantiating them with a
// multiprecision type is the precision-extension hook.

template <class Real>
Real named_ratio(FamilyKind kind, const Real& a, int k) {
    using std::log;
    using std::pow;
    switch (kind) {
        case FamilyKind::EulerF:
            return Real(1) / (pow(a, k) + Real(1));
        case FamilyKind::PartialTheta:
            return pow(a, 1 - 2 * k);
        case FamilyKind::EulerH: {
            if constexpr (std::is_floating_point_v<Real>) {
                const Real ak = pow(a, k);
                if (ak >= Real(2)) return Real(1) / (ak - Real(1));
                return Real(1) / std::expm1(Real(k) * std::log1p(a - Real(1)));
            } else {
                return Real(1) / (pow(a, k) - Real(1));
            }
        }
        case FamilyKind::Custom:
            break;
    }
    throw ParameterDomainError("named_ratio: Custom families have no closed-form ratio");
}

template <class Real>
struct RealValue {
    Real value;
    Real abs_error_bound;
    int terms_used;
};

/// Degree-n section of a named family at a real point, with a rounding bound.
template <class Real>
RealValue<Real> real_section(FamilyKind kind, const Real& a, bool alternating, int n, const Real& x) {
    using std::abs;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real arg = alternating ? Real(-x) : x;
    Real term = 1;
    Real sum = 1;
    Real magnitude = 1;
    Real weighted = 1;
    for (int k = 1; k <= n; ++k) {
        term = term * arg * named_ratio(kind, a, k);
        sum += term;
        const Real at = abs(term);
        magnitude += at;
        weighted += Real(4 * k) * at;
    }
    const Real bound = eps * (weighted + Real(n + 2) * magnitude);
    return {sum, bound, n + 1};
}

/// Full series of a named family at a real point; the tail is bounded by the
/// geometric majorant of the first neglected term.
template <class Real>
RealValue<Real> real_series(FamilyKind kind, const Real& a, bool alternating, const Real& x,
                            const Real& rel_tol, int max_terms = kMaxSeriesTerms) {
    using std::abs;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real arg = alternating ? Real(-x) : x;
    const Real r = abs(x);
    Real term = 1;
    Real sum = 1;
    Real magnitude = 1;
    Real weighted = 1;
    for (int k = 1; k < max_terms; ++k) {
        const Real next = term * arg * named_ratio(kind, a, k);
        const Real rho = r * named_ratio(kind, a, k + 1);
        if (rho < Real(1)) {
            const Real tail = abs(next) / (Real(1) - rho);
            const Real floor = abs(sum) > Real(1) ? abs(sum) : Real(1);
            if (tail < rel_tol * floor) {
                const Real bound = tail + eps * (weighted + Real(k + 2) * magnitude);
                return {sum, bound, k};
            }
        }
        term = next;
        sum += term;
        const Real at = abs(term);
        magnitude += at;
        weighted += Real(4 * k) * at;
    }
    throw DivergentMajorantError("real_series: tail majorant did not converge within the term cap");
}

}  // namespace lpzero
