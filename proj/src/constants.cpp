#include "lpzero/constants.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "minimize.hpp"

namespace lpzero {

namespace {

constexpr int kProbePoints = 32;
constexpr int kGrid = 512;

template <class Real>
std::string show(const Real& x) {
    std::ostringstream os;
    os.precision(std::numeric_limits<double>::max_digits10);
    os << x;
    return os.str();
}

// Monotone bisection with the probe guard.
template <class Real, class Pred>
BasicBracket<Real> bisect(Pred&& pred, Real lo, Real hi, const Real& tol, int cap, std::string name) {
    BasicBracket<Real> b;
    b.predicate = std::move(name);

    std::vector<Real> xs;
    std::vector<bool> vs;
    for (int i = 0; i < kProbePoints; ++i) {
        xs.push_back(lo + (hi - lo) * i / (kProbePoints - 1));
        vs.push_back(pred(xs.back()));
        ++b.evaluations;
    }
    int first_true = -1;
    bool monotone = true;
    for (int i = 0; i < kProbePoints; ++i) {
        if (vs[i] && first_true < 0) first_true = i;
        if (!vs[i] && first_true >= 0) monotone = false;
    }
    if (!monotone || first_true <= 0) {
        std::ostringstream os;
        os << b.predicate << ": predicate is not false...true on the probe grid over [" << show(lo) << ", "
           << show(hi) << "]:";
        for (int i = 0; i < kProbePoints; ++i) os << ' ' << show(xs[i]) << '=' << (vs[i] ? 'T' : 'F');
        throw MonotonicityError(os.str());
    }

    b.lo = xs[first_true - 1];
    b.hi = xs[first_true];
    while (b.hi - b.lo > tol && b.iterations < cap) {
        const Real mid = b.lo + (b.hi - b.lo) / 2;
        if (pred(mid)) {
            b.hi = mid;
        } else {
            b.lo = mid;
        }
        ++b.evaluations;
        ++b.iterations;
    }
    return b;
}

// min of g_a(-x), or of its degree-n section, over (a, a^3) at s = a^2.
template <class Real>
detail::IntervalMinimum<Real> theta_minimum(const Real& s, std::optional<int> n) {
    using std::sqrt;
    const Real a = sqrt(s);
    const Real lo = a, hi = a * a * a;
    const Real eps = std::numeric_limits<Real>::epsilon();
    // Minima can sit at the right endpoint (c_3), so refine close to it.
    Real x_tol;
    if constexpr (std::is_floating_point_v<Real>) {
        x_tol = 16 * eps * hi;
    } else {
        x_tol = pow(eps, Real(2) / 3) * hi;
    }
    if (n) {
        auto f = [&a, k = *n](const Real& x) { return real_section<Real>(FamilyKind::PartialTheta, a, true, k, x); };
        return detail::minimize_interior<Real>(f, lo, hi, kGrid, x_tol);
    }
    auto f = [&a, &eps](const Real& x) { return real_series<Real>(FamilyKind::PartialTheta, a, true, x, eps); };
    return detail::minimize_interior<Real>(f, lo, hi, kGrid, x_tol);
}

template <class Real>
bool theta_negative(const Real& s, std::optional<int> n) {
    const auto m = theta_minimum<Real>(s, n);
    return m.value < -m.error_bound;
}

template <class Real>
BasicBracket<Real> q_infinity_impl(const Real& tol, int cap) {
    auto pred = [](const Real& s) { return theta_negative<Real>(s, std::nullopt); };
    auto b = bisect<Real>(pred, Real(3), Real(4), tol, cap, "min g_sqrt(s)(-x) on (a, a^3) < 0");
    b.label = "q_infinity";
    return b;
}

template <class Real>
BasicBracket<Real> c_n_impl(int n, const Real& tol, int cap, int max_n) {
    if (n < 2) throw ParameterDomainError("c_n: n must be >= 2");
    if (n > max_n) {
        std::ostringstream os;
        os << "c_n: n = " << n << " exceeds the configured cap " << max_n;
        throw ParameterDomainError(os.str());
    }
    auto pred = [n](const Real& s) { return theta_negative<Real>(s, n); };
    std::ostringstream name;
    name << "min S_" << n << "(-x, g_sqrt(s)) on (a, a^3) < 0";
    auto b = bisect<Real>(pred, Real(2.5), Real(4.5), tol, cap, name.str());
    b.label = "c_" + std::to_string(n);
    return b;
}

double largest_root(const RealPolynomial& p, double lo, double hi) {
    const auto roots = real_roots(p, lo, hi, 1e-15);
    if (roots.empty()) throw ConsistencyError("thresholds: no root in the search interval");
    return roots.back();
}

}  // namespace

Bracket q_infinity(double tol) {
    if (!(tol >= 1e-10)) throw ParameterDomainError("q_infinity: tol must be >= 1e-10");
    return q_infinity_impl<double>(tol, kBisectionCap);
}

Bracket c_n(int n, double tol, int max_n) {
    if (!(tol >= 1e-10)) throw ParameterDomainError("c_n: tol must be >= 1e-10");
    return c_n_impl<double>(n, tol, kBisectionCap, max_n);
}

BasicBracket<Extended> q_infinity_extended(const Extended& tol) {
    if (!(tol >= Extended("1e-90"))) throw ParameterDomainError("q_infinity_extended: tol must be >= 1e-90");
    return q_infinity_impl<Extended>(tol, kExtendedBisectionCap);
}

BasicBracket<Extended> c_n_extended(int n, const Extended& tol, int max_n) {
    if (!(tol >= Extended("1e-90"))) throw ParameterDomainError("c_n_extended: tol must be >= 1e-90");
    return c_n_impl<Extended>(n, tol, kExtendedBisectionCap, max_n);
}

std::string to_decimal(const Extended& x, int digits) { return x.str(digits, std::ios_base::fmtflags(0)); }

CriticalEstimate critical_a(double tol) {
    if (!(tol >= 1e-8)) throw ParameterDomainError("critical_a: tol must be >= 1e-8");
    auto pred = [](double a) { return sign_test_Fa(a).verdict == Verdict::InLP; };
    CriticalEstimate out;
    out.bracket = bisect<double>(pred, 3.9, 4.0, tol, kBisectionCap, "sign_test_Fa(a) == InLP");
    out.bracket.label = "NON-RIGOROUS ESTIMATE";
    out.consistent_with_lower_bound = out.bracket.lo >= 3.90155 - 1e-4;
    out.within_reference_bracket = out.consistent_with_lower_bound && out.bracket.hi <= 3.91719 + 1e-4;
    return out;
}

std::vector<ThresholdRow> thresholds() {
    std::vector<ThresholdRow> rows;
    auto add = [&rows](std::string name, std::string poly, double computed, double reference, bool upper_only,
                       bool informational) {
        ThresholdRow r;
        r.name = std::move(name);
        r.polynomial = std::move(poly);
        r.computed = computed;
        r.reference = reference;
        r.deviation = std::abs(computed - reference);
        r.acceptance = upper_only ? "root<=reference" : "abs_deviation<=1e-4";
        r.accepted = upper_only ? computed <= reference : r.deviation <= 1e-4;
        r.informational = informational;
        rows.push_back(std::move(r));
    };

    add("septic", "a^7 - 3a^6 - a^4 - a^3 - 3a^2 - 1",
        largest_root(RealPolynomial::from_descending({1, -3, 0, -1, -1, -3, 0, -1}), 1.0, 10.0), 3.16258, false,
        false);
    add("b_polynomial", "b^11 - 2b^10 + 2b^7 - b^4 + 2b^3 - 2b^2 - 2",
        largest_root(RealPolynomial::from_descending({1, -2, 0, 0, 2, 0, 0, -1, 2, -2, 0, -2}), 1.0, 2.0), 1.47,
        true, false);
    add("quintic", "t^5 - 2t^4 + 1.8t - 2/9",
        largest_root(RealPolynomial{-2.0 / 9.0, 1.8, 0, 0, -2, 1}, 1.0, 2.0), 1.57685, false, false);
    add("octic", "a^8 - 8a^7 + 15a^6 + 12a^5 - 21a^4 - 28a^3 - 43a^2 - 40a - 16", lemma4_threshold(), 3.90155,
        false, false);
    add("degree20", "-162a^20 + 513a^19 + 567a^18 - 594a^17 + ... + 729a + 463",
        largest_root(lemma5::printed_polynomial(), 3.0, 5.0), 3.91719, false, false);
    add("degree20_product_form", "expanded product form of S_6(z_0) <= 0 (coefficient of a^17 is -450)",
        largest_root(lemma5::product_polynomial(), 3.0, 5.0), 3.91719, false, true);
    return rows;
}

ScanResult conjecture_scan(double a_lo, double a_hi, int steps) {
    if (!(a_lo > 1.0) || !(a_hi > a_lo)) throw ParameterDomainError("conjecture_scan: need 1 < a_lo < a_hi");
    if (steps < 10) throw ParameterDomainError("conjecture_scan: steps must be >= 10");
    ScanResult out;
    std::optional<Verdict> last;
    for (int i = 0; i < steps; ++i) {
        const double a = a_lo + (a_hi - a_lo) * i / (steps - 1);
        const auto r = sign_test_Fa(a);
        out.rows.push_back({a, *r.witness_value, r.verdict});
        if (r.verdict == Verdict::Boundary) continue;
        if (last && *last != r.verdict) {
            ++out.transitions;
            if (!(*last == Verdict::NotInLP && r.verdict == Verdict::InLP)) out.monotone = false;
        }
        last = r.verdict;
    }
    if (out.transitions > 1) out.monotone = false;
    return out;
}

}  // namespace lpzero
