#pragma once

// Real-root isolation by Sturm sequences.
//
// Two arithmetics share one isolation driver: long double with
// per-step renormalization (fast, may report ConditioningError) and exact
// GMP rationals (every binary64 coefficient is a dyadic rational, so the
// exact path decides the problem that was actually posed). Automatic tries
// the floating path first and falls back on any conditioning failure.

#include <initializer_list>
#include <span>
#include <vector>

#include "lpzero/series.hpp"

namespace lpzero {

class RealPolynomial {
public:
    RealPolynomial() = default;
    /// Coefficients in ascending degree order; trailing zeros are stripped.
    explicit RealPolynomial(std::vector<double> ascending);
    RealPolynomial(std::initializer_list<double> ascending)
        : RealPolynomial(std::vector<double>(ascending)) {}

    static RealPolynomial from_descending(std::vector<double> descending);
    static RealPolynomial from_roots(std::span<const double> roots, double leading = 1.0);
    static RealPolynomial monomial(int degree, double coeff = 1.0);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    double coeff(int k) const noexcept;
    double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

    /// Plain Horner.
    double operator()(double x) const noexcept;
    /// Compensated Horner: as accurate as Horner in twice the working precision.
    double eval_compensated(double x) const noexcept;
    /// Bound on |eval_compensated(x) - p(x)|.
    double compensated_error_bound(double x) const noexcept;

    RealPolynomial derivative() const;

    friend RealPolynomial operator+(const RealPolynomial& lhs, const RealPolynomial& rhs);
    friend RealPolynomial operator-(const RealPolynomial& lhs, const RealPolynomial& rhs);
    friend RealPolynomial operator*(const RealPolynomial& lhs, const RealPolynomial& rhs);
    friend RealPolynomial operator*(double s, const RealPolynomial& p);

private:
    void trim();
    std::vector<double> coeffs_;
};

/// Sign of p(x), exact: compensated evaluation when its error bound
/// decides, otherwise rational arithmetic.
int certified_sign(const RealPolynomial& p, double x);

/// An interval holding exactly one distinct real root. Signs are those of the
/// square-free part at the endpoints, which equal the signs of p unless the
/// root has even multiplicity.
struct RootBracket {
    double lo = 0.0;
    double hi = 0.0;
    int sign_lo = 0;
    int sign_hi = 0;

    double width() const noexcept { return hi - lo; }
    double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }
};

enum class Arithmetic { Floating, Exact, Automatic };

/// One certified bracket per distinct real root in [lo, hi]. Endpoints that
/// are roots are nudged outward by 16 machine epsilons.
std::vector<RootBracket> isolate_real_roots(const RealPolynomial& p, double lo, double hi,
                                            Arithmetic arithmetic = Arithmetic::Automatic);

/// Number of distinct real roots in (lo, hi]; lo, hi may be infinite.
int count_distinct_real_roots(const RealPolynomial& p, double lo, double hi,
                              Arithmetic arithmetic = Arithmetic::Automatic);

/// Bisection inside a bracket down to width <= tol; returns the midpoint.
double refine(const RealPolynomial& p, const RootBracket& bracket, double tol);

/// True iff every root of p (with multiplicity) is real.
bool is_real_rooted(const RealPolynomial& p, Arithmetic arithmetic = Arithmetic::Automatic);

/// Isolate and refine all real roots in [lo, hi].
std::vector<double> real_roots(const RealPolynomial& p, double lo, double hi, double tol = 1e-13);

/// Degree-n section in the normalized alternating form
///   1 - u + u^2/q_2 - u^3/(q_2^2 q_3) + ...
/// whatever the family's own sign and scaling flags.
struct SectionPolynomial {
    RealPolynomial poly;
    /// Roots map back to the family's variable through z = u * z_per_u
    /// (negative unless the family is already alternating).
    double z_per_u = 1.0;
};

SectionPolynomial section_polynomial(const SeriesFamily& family, int n);

}  // namespace lpzero
