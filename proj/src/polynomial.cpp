#include "lpzero/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/multiprecision/gmp.hpp>

namespace lpzero {

namespace {

using Rational = boost::multiprecision::mpq_rational;
using Wide = long double;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr Wide kWideEps = std::numeric_limits<Wide>::epsilon();

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }
int sign_of(Wide v) { return (v > 0.0L) - (v < 0.0L); }
int sign_of(const Rational& v) { return v.sign(); }

template <class T>
void strip(std::vector<T>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// ---------------------------------------------------------------------------
// Exact arithmetic helpers.

using RPoly = std::vector<Rational>;

RPoly to_rational(const RealPolynomial& p) {
    RPoly out;
    out.reserve(p.coeffs().size());
    for (double c : p.coeffs()) out.emplace_back(c);
    return out;
}

RPoly rderivative(const RPoly& p) {
    RPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    strip(d);
    return d;
}

// Quotient and remainder of a / b over Q.
void rdivmod(const RPoly& a, const RPoly& b, RPoly* quotient, RPoly* remainder) {
    RPoly r = a;
    const std::size_t db = b.size() - 1;
    RPoly q(a.size() >= b.size() ? a.size() - db : 0);
    for (std::size_t i = a.size(); i-- > db;) {
        if (r[i] == 0) continue;
        const Rational coef = r[i] / b.back();
        q[i - db] = coef;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= coef * b[j];
    }
    r.resize(std::min(r.size(), db));
    strip(r);
    strip(q);
    if (quotient) *quotient = std::move(q);
    if (remainder) *remainder = std::move(r);
}

void make_monic(RPoly& p) {
    if (p.empty()) return;
    const Rational lc = p.back();
    for (auto& c : p) c /= lc;
}

// Divide by |lc| so chain members stay small without flipping signs.
void scale_positive(RPoly& p) {
    if (p.empty()) return;
    const Rational lc = abs(p.back());
    for (auto& c : p) c /= lc;
}

RPoly rgcd(RPoly a, RPoly b) {
    while (!b.empty()) {
        RPoly r;
        rdivmod(a, b, nullptr, &r);
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    make_monic(a);
    return a;
}

Rational reval(const RPoly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

RPoly square_free_part(const RPoly& p) {
    const RPoly g = rgcd(p, rderivative(p));
    if (g.size() <= 1) return p;
    RPoly q;
    rdivmod(p, g, &q, nullptr);
    return q;
}

// ---------------------------------------------------------------------------
// Sturm chains.

class ExactChain {
public:
    explicit ExactChain(const RealPolynomial& p) {
        RPoly base = square_free_part(to_rational(p));
        base_ = base;
        scale_positive(base);
        chain_.push_back(base);
        RPoly d = rderivative(base);
        if (d.empty()) return;
        scale_positive(d);
        chain_.push_back(d);
        while (chain_.back().size() > 1) {
            RPoly r;
            rdivmod(chain_[chain_.size() - 2], chain_.back(), nullptr, &r);
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            scale_positive(r);
            chain_.push_back(std::move(r));
        }
    }

    int degree() const { return static_cast<int>(base_.size()) - 1; }

    int variations(double x) const {
        const Rational X(x);
        int count = 0, last = 0;
        for (const auto& poly : chain_) {
            const int s = sign_of(reval(poly, X));
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    int variations_at_infinity(int direction) const {
        int count = 0, last = 0;
        for (const auto& poly : chain_) {
            int s = sign_of(poly.back());
            if (direction < 0 && (poly.size() - 1) % 2 == 1) s = -s;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    int base_sign(double x) const { return sign_of(reval(base_, Rational(x))); }

private:
    RPoly base_;
    std::vector<RPoly> chain_;
};

using WPoly = std::vector<Wide>;

Wide weval(const WPoly& p, Wide x) {
    Wide acc = 0.0L;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Wide max_abs(const WPoly& p) {
    Wide m = 0.0L;
    for (Wide c : p) m = std::max(m, std::fabs(c));
    return m;
}

void normalize(WPoly& p) {
    const Wide m = max_abs(p);
    if (m > 0.0L)
        for (auto& c : p) c /= m;
}

class FloatChain {
public:
    explicit FloatChain(const RealPolynomial& p) : base_(p) {
        WPoly p0(p.coeffs().begin(), p.coeffs().end());
        normalize(p0);
        if (p0.size() > 1 && std::fabs(p0.back()) < 1e-12L) {
            throw ConditioningError(
                "Sturm: leading coefficient is below 1e-12 of the largest; the polynomial is too badly scaled "
                "for floating isolation, use rational arithmetic");
        }
        chain_.push_back(p0);
        if (p0.size() <= 1) return;
        WPoly d;
        for (std::size_t k = 1; k < p0.size(); ++k) d.push_back(p0[k] * static_cast<Wide>(k));
        normalize(d);
        chain_.push_back(d);

        while (chain_.back().size() > 1) {
            const WPoly& a = chain_[chain_.size() - 2];
            const WPoly& b = chain_.back();
            WPoly r = a;
            const std::size_t db = b.size() - 1;
            Wide growth = 1.0L;
            for (std::size_t i = a.size(); i-- > db;) {
                const Wide coef = r[i] / b.back();
                growth = std::max(growth, std::fabs(coef));
                for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= coef * b[j];
            }
            r.resize(db);
            for (auto& c : r) c = -c;

            const Wide m = max_abs(r);
            const Wide zero_tol = 256.0L * kWideEps * growth * static_cast<Wide>(a.size());
            if (m <= zero_tol) {
                // Remainder vanished: the last member is gcd(p, p').
                throw ConditioningError(
                    "Sturm: p and p' share a factor (multiple root); floating isolation cannot certify it, "
                    "use rational arithmetic");
            }
            if (m <= 1e4L * zero_tol) {
                throw ConditioningError("Sturm: remainder magnitude is indistinguishable from rounding noise");
            }
            while (!r.empty() && std::fabs(r.back()) <= zero_tol) r.pop_back();
            if (std::fabs(r.back()) < 1e-9L * m) {
                throw ConditioningError(
                    "Sturm: leading-coefficient collapse in the remainder sequence, use rational arithmetic");
            }
            normalize(r);
            chain_.push_back(std::move(r));
        }
    }

    int degree() const { return base_.degree(); }

    int variations(double x) const {
        int count = 0, last = 0;
        for (const auto& poly : chain_) {
            const int s = sign_of(weval(poly, static_cast<Wide>(x)));
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    int variations_at_infinity(int direction) const {
        int count = 0, last = 0;
        for (const auto& poly : chain_) {
            int s = sign_of(poly.back());
            if (direction < 0 && (poly.size() - 1) % 2 == 1) s = -s;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    int base_sign(double x) const { return certified_sign(base_, x); }

private:
    RealPolynomial base_;
    std::vector<WPoly> chain_;
};

template <class Chain>
int variations_at(const Chain& chain, double x) {
    if (std::isinf(x)) return chain.variations_at_infinity(x > 0 ? 1 : -1);
    return chain.variations(x);
}

double nudge_outward(const RealPolynomial& p, double x, int direction) {
    (void)p;
    return x + direction * 16.0 * kEps * std::max(1.0, std::abs(x));
}

template <class Chain>
std::vector<RootBracket> isolate_with(const Chain& chain, const RealPolynomial& p, double lo, double hi,
                                      bool floating) {
    for (int guard = 0; chain.base_sign(lo) == 0; ++guard) {
        if (guard > 64) throw ConditioningError("isolate_real_roots: could not move the lower endpoint off a root");
        lo = nudge_outward(p, lo, -1);
    }
    for (int guard = 0; chain.base_sign(hi) == 0; ++guard) {
        if (guard > 64) throw ConditioningError("isolate_real_roots: could not move the upper endpoint off a root");
        hi = nudge_outward(p, hi, +1);
    }

    struct Item {
        double lo, hi;
        int vlo, vhi;
    };
    std::vector<Item> stack{{lo, hi, chain.variations(lo), chain.variations(hi)}};
    std::vector<RootBracket> out;
    int steps = 0;
    while (!stack.empty()) {
        if (++steps > 200000) throw ConditioningError("isolate_real_roots: bisection budget exhausted");
        const Item item = stack.back();
        stack.pop_back();
        const int n = item.vlo - item.vhi;
        if (n < 0) throw ConditioningError("isolate_real_roots: negative Sturm count (rounding corrupted the chain)");
        if (n == 0) continue;
        if (n == 1) {
            RootBracket b{item.lo, item.hi, chain.base_sign(item.lo), chain.base_sign(item.hi)};
            if (b.sign_lo * b.sign_hi != -1) {
                if (floating) {
                    throw ConditioningError(
                        "isolate_real_roots: bracket has no certified sign change; floating Sturm count is wrong");
                }
                throw ConsistencyError("isolate_real_roots: exact Sturm bracket without a sign change");
            }
            out.push_back(b);
            continue;
        }
        double mid = item.lo + 0.5 * (item.hi - item.lo);
        for (int k = 1; chain.base_sign(mid) == 0 && k < 32; ++k) mid = item.lo + (0.5 + k / 67.0) * (item.hi - item.lo);
        if (!(item.lo < mid && mid < item.hi)) {
            throw ConditioningError("isolate_real_roots: distinct roots closer than binary64 resolution");
        }
        const int vm = chain.variations(mid);
        stack.push_back({mid, item.hi, vm, item.vhi});
        stack.push_back({item.lo, mid, item.vlo, vm});
    }
    std::sort(out.begin(), out.end(), [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
    return out;
}

void require_nonzero(const RealPolynomial& p, const char* where) {
    if (p.is_zero()) throw ParameterDomainError(std::string(where) + ": polynomial must be nonzero");
}

void require_interval(double lo, double hi, const char* where) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw ParameterDomainError(std::string(where) + ": need a finite interval with lo < hi");
    }
}

double cauchy_bound(const RealPolynomial& p) {
    double m = 0.0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::abs(p.coeff(k) / p.leading()));
    return 1.0 + m;
}

}  // namespace

// ---------------------------------------------------------------------------

RealPolynomial::RealPolynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw ParameterDomainError("RealPolynomial: coefficients must be finite");
    }
    trim();
}

RealPolynomial RealPolynomial::from_descending(std::vector<double> descending) {
    std::reverse(descending.begin(), descending.end());
    return RealPolynomial(std::move(descending));
}

RealPolynomial RealPolynomial::from_roots(std::span<const double> roots, double leading) {
    RealPolynomial p({leading});
    for (double r : roots) p = p * RealPolynomial({-r, 1.0});
    return p;
}

RealPolynomial RealPolynomial::monomial(int degree, double coeff) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
    c.back() = coeff;
    return RealPolynomial(std::move(c));
}

void RealPolynomial::trim() { strip(coeffs_); }

double RealPolynomial::coeff(int k) const noexcept {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0.0;
}

double RealPolynomial::operator()(double x) const noexcept {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

double RealPolynomial::eval_compensated(double x) const noexcept {
    if (coeffs_.empty()) return 0.0;
    double s = coeffs_.back();
    double c = 0.0;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        const double p = s * x;
        const double pi = std::fma(s, x, -p);
        const double t = p + coeffs_[i];
        const double z = t - p;
        const double sigma = (p - (t - z)) + (coeffs_[i] - z);
        s = t;
        c = c * x + (pi + sigma);
    }
    return s + c;
}

double RealPolynomial::compensated_error_bound(double x) const noexcept {
    const int n = std::max(degree(), 1);
    const double u = kEps;
    const double gamma = 2.0 * n * u / (1.0 - 2.0 * n * u);
    double abs_sum = 0.0;
    const double ax = std::abs(x);
    for (std::size_t i = coeffs_.size(); i-- > 0;) abs_sum = abs_sum * ax + std::abs(coeffs_[i]);
    const double v = eval_compensated(x);
    return u * std::abs(v) + gamma * gamma * abs_sum + 8.0 * n * std::numeric_limits<double>::denorm_min();
}

RealPolynomial RealPolynomial::derivative() const {
    std::vector<double> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<double>(k));
    return RealPolynomial(std::move(d));
}

RealPolynomial operator+(const RealPolynomial& lhs, const RealPolynomial& rhs) {
    std::vector<double> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs.coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
    return RealPolynomial(std::move(c));
}

RealPolynomial operator-(const RealPolynomial& lhs, const RealPolynomial& rhs) { return lhs + (-1.0) * rhs; }

RealPolynomial operator*(const RealPolynomial& lhs, const RealPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<double> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return RealPolynomial(std::move(c));
}

RealPolynomial operator*(double s, const RealPolynomial& p) {
    std::vector<double> c = p.coeffs_;
    for (auto& v : c) v *= s;
    return RealPolynomial(std::move(c));
}

int certified_sign(const RealPolynomial& p, double x) {
    if (p.is_zero()) return 0;
    const double v = p.eval_compensated(x);
    if (std::isfinite(v)) {
        const double bound = p.compensated_error_bound(x);
        if (std::isfinite(bound) && std::abs(v) > bound) return sign_of(v);
    }
    return sign_of(reval(to_rational(p), Rational(x)));
}

std::vector<RootBracket> isolate_real_roots(const RealPolynomial& p, double lo, double hi, Arithmetic arithmetic) {
    require_nonzero(p, "isolate_real_roots");
    require_interval(lo, hi, "isolate_real_roots");
    if (p.degree() <= 0) return {};
    if (arithmetic == Arithmetic::Exact) return isolate_with(ExactChain(p), p, lo, hi, false);
    try {
        return isolate_with(FloatChain(p), p, lo, hi, true);
    } catch (const ConditioningError&) {
        if (arithmetic == Arithmetic::Floating) throw;
    }
    return isolate_with(ExactChain(p), p, lo, hi, false);
}

int count_distinct_real_roots(const RealPolynomial& p, double lo, double hi, Arithmetic arithmetic) {
    require_nonzero(p, "count_distinct_real_roots");
    if (!(lo < hi)) throw ParameterDomainError("count_distinct_real_roots: need lo < hi");
    if (p.degree() <= 0) return 0;
    auto count = [&](const auto& chain) {
        const int n = variations_at(chain, lo) - variations_at(chain, hi);
        if (n < 0) throw ConditioningError("count_distinct_real_roots: negative Sturm count");
        return n;
    };
    if (arithmetic == Arithmetic::Exact) return count(ExactChain(p));
    try {
        return count(FloatChain(p));
    } catch (const ConditioningError&) {
        if (arithmetic == Arithmetic::Floating) throw;
    }
    return count(ExactChain(p));
}

double refine(const RealPolynomial& p, const RootBracket& bracket, double tol) {
    require_nonzero(p, "refine");
    if (!(tol > 0.0)) throw ParameterDomainError("refine: tol must be > 0");
    if (!(bracket.lo < bracket.hi)) throw ParameterDomainError("refine: bracket needs lo < hi");
    double lo = bracket.lo, hi = bracket.hi;
    const int s_lo = certified_sign(p, lo);
    const int s_hi = certified_sign(p, hi);
    if (s_lo == 0) return lo;
    if (s_hi == 0) return hi;
    if (s_lo != s_hi) {
        while (hi - lo > tol) {
            const double mid = lo + 0.5 * (hi - lo);
            if (!(lo < mid && mid < hi)) break;
            const int s = certified_sign(p, mid);
            if (s == 0) return mid;
            (s == s_lo ? lo : hi) = mid;
        }
        return lo + 0.5 * (hi - lo);
    }
    // Even multiplicity: no sign change, so bisect on the exact Sturm count.
    const ExactChain chain(p);
    int v_lo = chain.variations(lo);
    if (v_lo - chain.variations(hi) != 1) throw PreconditionError("refine: bracket does not isolate one root");
    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (!(lo < mid && mid < hi)) break;
        const int v_mid = chain.variations(mid);
        if (v_lo - v_mid == 1) {
            hi = mid;
        } else {
            lo = mid;
            v_lo = v_mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

bool is_real_rooted(const RealPolynomial& p, Arithmetic arithmetic) {
    require_nonzero(p, "is_real_rooted");
    if (p.degree() <= 1) return true;
    if (arithmetic != Arithmetic::Exact) {
        try {
            const FloatChain chain(p);
            const int n = chain.variations_at_infinity(-1) - chain.variations_at_infinity(1);
            if (arithmetic == Arithmetic::Floating) return n == p.degree();
            if (n == p.degree()) {
                // Certify: as many sign-change brackets as the degree.
                const double b = cauchy_bound(p);
                if (std::isfinite(b) && isolate_with(chain, p, -b, b, true).size() == static_cast<std::size_t>(p.degree())) {
                    return true;
                }
            }
        } catch (const ConditioningError&) {
            if (arithmetic == Arithmetic::Floating) throw;
        }
    }
    const ExactChain chain(p);
    return chain.variations_at_infinity(-1) - chain.variations_at_infinity(1) == chain.degree();
}

std::vector<double> real_roots(const RealPolynomial& p, double lo, double hi, double tol) {
    std::vector<double> roots;
    for (const auto& b : isolate_real_roots(p, lo, hi)) {
        roots.push_back(refine(p, b, tol * std::max(1.0, std::abs(b.midpoint()))));
    }
    return roots;
}

SectionPolynomial section_polynomial(const SeriesFamily& family, int n) {
    family.validate();
    if (n < 1) throw ParameterDomainError("section_polynomial: n must be >= 1");
    const SeriesFamily u_family = family.normalize(true);
    if (family.is_polynomial() && n > family.polynomial_degree()) {
        throw ParameterDomainError("section_polynomial: n exceeds the custom polynomial degree");
    }
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    double term = 1.0;
    c[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        term *= coefficient_ratio(u_family, k);
        if (term == 0.0) {
            std::ostringstream os;
            os << "section_polynomial: coefficient " << k << " underflows binary64";
            throw ParameterDomainError(os.str());
        }
        c[k] = k % 2 == 1 ? -term : term;
    }
    SectionPolynomial out;
    out.poly = RealPolynomial(std::move(c));
    const double scale = family.normalized ? 1.0 : 1.0 / coefficient_ratio(family, 1);
    out.z_per_u = family.alternating ? scale : -scale;
    return out;
}

}  // namespace lpzero
