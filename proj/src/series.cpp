#include "lpzero/series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace lpzero {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_named(FamilyKind kind) { return kind != FamilyKind::Custom; }

// ln(a_k / a_{k-1}) before normalization.
double raw_log_ratio(const SeriesFamily& f, int k) {
    const double la = std::log(f.a);
    switch (f.kind) {
        case FamilyKind::EulerF:
            // ln(a^k + 1) = k ln a + ln(1 + a^{-k}) stays finite for any k.
            return -(k * la + std::log1p(std::pow(f.a, -k)));
        case FamilyKind::PartialTheta:
            return (1.0 - 2.0 * k) * la;
        case FamilyKind::EulerH: {
            const double ak = std::pow(f.a, k);
            if (ak < 2.0) return -std::log(std::expm1(k * std::log1p(f.a - 1.0)));
            return -(k * la + std::log1p(-std::pow(f.a, -k)));
        }
        case FamilyKind::Custom: {
            const auto& L = f.custom_log_coeffs;
            if (k >= static_cast<int>(L.size())) return -std::numeric_limits<double>::infinity();
            return L[k] - L[k - 1];
        }
    }
    return 0.0;
}

double raw_ratio(const SeriesFamily& f, int k) {
    if (is_named(f.kind)) return named_ratio<double>(f.kind, f.a, k);
    const auto& L = f.custom_log_coeffs;
    if (k >= static_cast<int>(L.size())) return 0.0;
    return std::exp(L[k] - L[k - 1]);
}

void require_index(int k, int min, const char* what) {
    if (k < min) {
        std::ostringstream os;
        os << what << ": index " << k << " must be >= " << min;
        throw ParameterDomainError(os.str());
    }
}

double rounding_bound(double weighted, double magnitude_tail, int terms) {
    if (magnitude_tail == 0.0) return 0.0;
    return kEps * (weighted + (terms + 2) * (1.0 + magnitude_tail));
}

}  // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::EulerF: return "eulerF";
        case FamilyKind::PartialTheta: return "theta";
        case FamilyKind::EulerH: return "eulerH";
        case FamilyKind::Custom: return "custom";
    }
    return "unknown";
}

SeriesFamily SeriesFamily::euler_f(double a) {
    SeriesFamily f;
    f.kind = FamilyKind::EulerF;
    f.a = a;
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::partial_theta(double a) {
    SeriesFamily f;
    f.kind = FamilyKind::PartialTheta;
    f.a = a;
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::euler_h(double a) {
    SeriesFamily f;
    f.kind = FamilyKind::EulerH;
    f.a = a;
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::custom(std::vector<double> log_coeffs) {
    SeriesFamily f;
    f.kind = FamilyKind::Custom;
    f.a = 0.0;
    f.custom_log_coeffs = std::move(log_coeffs);
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::constant_one() { return custom({0.0}); }

SeriesFamily SeriesFamily::alternate(bool on) const {
    SeriesFamily f = *this;
    f.alternating = on;
    return f;
}

SeriesFamily SeriesFamily::normalize(bool on) const {
    SeriesFamily f = *this;
    f.normalized = on;
    f.validate();
    return f;
}

void SeriesFamily::validate() const {
    if (is_named(kind)) {
        if (!(a > 1.0) || !std::isfinite(a)) {
            std::ostringstream os;
            os << to_string(kind) << ": parameter a = " << a << " must be a finite real > 1";
            throw ParameterDomainError(os.str());
        }
        return;
    }
    if (custom_log_coeffs.empty()) throw ParameterDomainError("custom family needs at least one coefficient");
    for (double v : custom_log_coeffs) {
        if (!std::isfinite(v)) throw ParameterDomainError("custom log-coefficients must be finite");
    }
    if (normalized && custom_log_coeffs.size() < 2) {
        throw ParameterDomainError("normalization needs a_1, but the custom family has degree 0");
    }
}

int SeriesFamily::polynomial_degree() const {
    return kind == FamilyKind::Custom ? static_cast<int>(custom_log_coeffs.size()) - 1 : -1;
}

double log_ratio(const SeriesFamily& family, int k) {
    require_index(k, 1, "log_ratio");
    const double lr = raw_log_ratio(family, k);
    return family.normalized ? lr - raw_log_ratio(family, 1) : lr;
}

double coefficient_ratio(const SeriesFamily& family, int k) {
    require_index(k, 1, "coefficient_ratio");
    const double r = raw_ratio(family, k);
    return family.normalized ? r / raw_ratio(family, 1) : r;
}

double coefficient_log(const SeriesFamily& family, int k) {
    family.validate();
    require_index(k, 0, "coefficient_log");
    if (family.is_polynomial() && k > family.polynomial_degree()) {
        return -std::numeric_limits<double>::infinity();
    }
    double acc = (family.is_polynomial() && !family.normalized) ? family.custom_log_coeffs[0] : 0.0;
    for (int j = 1; j <= k; ++j) acc += log_ratio(family, j);
    return acc;
}

EvalResult evaluate(const SeriesFamily& family, std::complex<double> z, double rel_tol) {
    family.validate();
    if (!(rel_tol > 0.0)) throw ParameterDomainError("evaluate: rel_tol must be > 0");
    if (family.is_polynomial()) return evaluate_section_bounded(family, family.polynomial_degree(), z);

    const std::complex<double> w = family.alternating ? -z : z;
    const double r = std::abs(z);
    std::complex<double> term = 1.0;
    std::complex<double> sum = 1.0;
    double magnitude_tail = 0.0;
    double weighted = 0.0;
    for (int k = 1; k < kMaxSeriesTerms; ++k) {
        const std::complex<double> next = term * w * coefficient_ratio(family, k);
        const double rho = r * coefficient_ratio(family, k + 1);
        if (rho < 1.0) {
            const double tail = std::abs(next) / (1.0 - rho);
            if (tail < rel_tol * std::max(1.0, std::abs(sum))) {
                EvalResult out;
                out.value = sum;
                out.terms_used = k;
                out.truncation_bound = tail;
                out.rounding_bound = rounding_bound(weighted, magnitude_tail, k);
                out.abs_error_bound = out.truncation_bound + out.rounding_bound;
                return out;
            }
        }
        term = next;
        sum += term;
        const double at = std::abs(term);
        magnitude_tail += at;
        weighted += 10.0 * k * at;
    }
    EvalResult partial;
    partial.value = sum;
    partial.terms_used = kMaxSeriesTerms;
    partial.truncation_bound = std::numeric_limits<double>::infinity();
    partial.rounding_bound = rounding_bound(weighted, magnitude_tail, kMaxSeriesTerms);
    partial.abs_error_bound = std::numeric_limits<double>::infinity();
    throw TruncationError("evaluate: geometric majorant did not converge within the term cap", partial);
}

EvalResult evaluate_section_bounded(const SeriesFamily& family, int n, std::complex<double> z) {
    family.validate();
    require_index(n, 0, "evaluate_section");
    if (family.is_polynomial()) n = std::min(n, family.polynomial_degree());
    const std::complex<double> w = family.alternating ? -z : z;
    const double a0 = (family.is_polynomial() && !family.normalized) ? std::exp(family.custom_log_coeffs[0]) : 1.0;
    std::complex<double> term = a0;
    std::complex<double> sum = a0;
    double magnitude_tail = 0.0;
    double weighted = 0.0;
    for (int k = 1; k <= n; ++k) {
        term = term * w * coefficient_ratio(family, k);
        sum += term;
        const double at = std::abs(term);
        magnitude_tail += at;
        weighted += 10.0 * k * at;
    }
    EvalResult out;
    out.value = sum;
    out.terms_used = n + 1;
    out.rounding_bound = rounding_bound(weighted, magnitude_tail, n + 1) * std::max(1.0, a0);
    out.abs_error_bound = out.rounding_bound;
    return out;
}

std::complex<double> evaluate_section(const SeriesFamily& family, int n, std::complex<double> z) {
    return evaluate_section_bounded(family, n, z).value;
}

double tail_bound(const SeriesFamily& family, int start_index, double r) {
    family.validate();
    require_index(start_index, 0, "tail_bound");
    if (!(r >= 0.0) || !std::isfinite(r)) throw ParameterDomainError("tail_bound: radius must be finite and >= 0");

    auto term_at = [&](int k) {
        if (k == 0) return std::exp(coefficient_log(family, 0));
        if (r == 0.0) return 0.0;
        return std::exp(coefficient_log(family, k) + k * std::log(r));
    };

    if (family.is_polynomial()) {
        double sum = 0.0;
        for (int k = start_index; k <= family.polynomial_degree(); ++k) sum += term_at(k);
        return sum * (1.0 + 4.0 * kEps * (family.polynomial_degree() + 2));
    }

    const double first = term_at(start_index);
    const double rho = r * coefficient_ratio(family, start_index + 1);
    if (!(rho < 1.0)) {
        std::ostringstream os;
        os << "tail_bound: majorant ratio " << rho << " >= 1 at start index " << start_index << ", radius " << r;
        throw DivergentMajorantError(os.str());
    }
    // exp/log round-trips lose a few ulps of the exponent; inflate accordingly.
    const double log_first = first > 0.0 ? std::abs(std::log(first)) : 0.0;
    const double inflate = 1.0 + 4.0 * kEps * (log_first + 8.0);
    return first / (1.0 - rho) * inflate;
}

QuotientView::QuotientView(SeriesFamily family) : family_(std::move(family)) { family_.validate(); }

int QuotientView::max_index() const {
    return family_.is_polynomial() ? family_.polynomial_degree() : INT_MAX;
}

double QuotientView::p(int n) const {
    require_index(n, 1, "QuotientView::p");
    if (n > max_index()) throw InsufficientDataError("QuotientView::p: index past the last coefficient");
    return 1.0 / coefficient_ratio(family_, n);
}

double QuotientView::log_q(int n) const {
    require_index(n, 2, "QuotientView::q");
    if (n > max_index()) throw InsufficientDataError("QuotientView::q: index past the last coefficient");
    return log_ratio(family_, n - 1) - log_ratio(family_, n);
}

double QuotientView::q(int n) const {
    require_index(n, 2, "QuotientView::q");
    if (n > max_index()) throw InsufficientDataError("QuotientView::q: index past the last coefficient");
    const double a = family_.a;
    switch (family_.kind) {
        case FamilyKind::EulerF:
            // (a^n + 1) / (a^{n-1} + 1), written to survive a^n overflow.
            return a * (1.0 + std::pow(a, -n)) / (1.0 + std::pow(a, 1 - n));
        case FamilyKind::PartialTheta:
            return a * a;
        case FamilyKind::EulerH:
            return a * (1.0 - std::pow(a, -n)) / (1.0 - std::pow(a, 1 - n));
        case FamilyKind::Custom:
            return std::exp(log_q(n));
    }
    return 0.0;
}

std::optional<double> QuotientView::limit() const {
    switch (family_.kind) {
        case FamilyKind::EulerF:
        case FamilyKind::EulerH:
            return family_.a;
        case FamilyKind::PartialTheta:
            return family_.a * family_.a;
        case FamilyKind::Custom:
            return std::nullopt;
    }
    return std::nullopt;
}

Monotonicity QuotientView::monotonicity() const {
    switch (family_.kind) {
        case FamilyKind::EulerF: return Monotonicity::Increasing;
        case FamilyKind::PartialTheta: return Monotonicity::Constant;
        case FamilyKind::EulerH: return Monotonicity::Decreasing;
        case FamilyKind::Custom: break;
    }
    const int last = max_index();
    if (last < 3) return Monotonicity::Unknown;
    bool inc = true, dec = true, cst = true;
    for (int n = 2; n < last; ++n) {
        const double d = q(n + 1) - q(n);
        const double tol = 8.0 * kEps * std::max(q(n), q(n + 1));
        if (d < -tol) inc = false;
        if (d > tol) dec = false;
        if (std::abs(d) > tol) cst = false;
    }
    if (cst) return Monotonicity::Constant;
    if (inc) return Monotonicity::Increasing;
    if (dec) return Monotonicity::Decreasing;
    return Monotonicity::Unknown;
}

QuotientView quotients(const SeriesFamily& family) {
    family.validate();
    if (family.is_polynomial() && family.custom_log_coeffs.size() < 3) {
        throw InsufficientDataError("quotients: a custom family needs at least 3 coefficients");
    }
    return QuotientView(family);
}

}  // namespace lpzero
