#include "lpzero/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "minimize.hpp"

namespace lpzero {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_a(double a, const char* where) {
    if (!(a > 1.0) || !std::isfinite(a)) throw ParameterDomainError(std::string(where) + ": a must be > 1");
}

void require_grid(int grid, const char* where) {
    if (grid < 8) throw ParameterDomainError(std::string(where) + ": grid must be >= 8");
}

CriterionReport witness_report(std::string name, const detail::IntervalMinimum<double>& m, double tol) {
    CriterionReport r;
    r.criterion = std::move(name);
    r.witness_x = m.x;
    r.witness_value = m.value;
    r.margin = m.value;
    r.error_bound = tol + m.error_bound;
    if (m.value < -r.error_bound) {
        r.verdict = Verdict::InLP;
    } else if (m.value > r.error_bound) {
        r.verdict = Verdict::NotInLP;
    } else {
        r.verdict = Verdict::Boundary;
    }
    r.details.emplace_back("evaluations", m.evaluations);
    return r;
}

}  // namespace

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::InLP: return "InLP";
        case Verdict::NotInLP: return "NotInLP";
        case Verdict::Boundary: return "Boundary";
        case Verdict::Inapplicable: return "Inapplicable";
    }
    return "?";
}

std::optional<double> CriterionReport::detail(const std::string& key) const {
    for (const auto& [k, v] : details)
        if (k == key) return v;
    return std::nullopt;
}

CriterionReport hutchinson_test(const SeriesFamily& family, int n_max) {
    if (n_max < 2) throw ParameterDomainError("hutchinson_test: n_max must be >= 2");
    const QuotientView qv = quotients(family);

    CriterionReport r;
    r.criterion = "hutchinson_test";
    double q_min = 0.0;
    double err = 0.0;
    bool extends = true;
    switch (family.kind) {
        case FamilyKind::EulerF:
            // q_n increases, so q_2 is the infimum.
            q_min = qv.q(2);
            err = 4.0 * kEps * q_min;
            break;
        case FamilyKind::PartialTheta:
            q_min = family.a * family.a;
            err = std::fma(family.a, family.a, -q_min) == 0.0 ? 0.0 : kEps * q_min;
            break;
        case FamilyKind::EulerH:
            // q_n decreases to a and stays above it.
            q_min = family.a;
            err = 0.0;
            break;
        case FamilyKind::Custom: {
            const int last = qv.max_index();
            extends = n_max >= last;
            q_min = std::numeric_limits<double>::infinity();
            for (int n = 2; n <= std::min(n_max, last); ++n) q_min = std::min(q_min, qv.q(n));
            err = 16.0 * kEps * q_min;
            break;
        }
    }
    r.margin = q_min - 4.0;
    r.error_bound = err;
    r.details.emplace_back("q_min", q_min);
    r.details.emplace_back("n_max", n_max);
    if (!extends) {
        r.verdict = Verdict::Inapplicable;
    } else if (std::abs(r.margin) <= err && err > 0.0) {
        r.verdict = Verdict::Boundary;
    } else if (r.margin >= 0.0) {
        r.verdict = Verdict::InLP;
    } else {
        r.verdict = Verdict::Inapplicable;
    }
    return r;
}

CriterionReport necessary_q2(const SeriesFamily& family) {
    const QuotientView qv = quotients(family);
    if (qv.monotonicity() != Monotonicity::Increasing) {
        throw PreconditionError("necessary_q2: the family's q_n must be increasing");
    }
    CriterionReport r;
    r.criterion = "necessary_q2";
    const double q2 = qv.q(2);
    r.margin = q2 - 3.0;
    r.error_bound = 4.0 * kEps * q2;
    r.details.emplace_back("q2", q2);
    if (r.margin < -r.error_bound) {
        r.verdict = Verdict::NotInLP;
    } else if (r.margin <= r.error_bound) {
        r.verdict = Verdict::Boundary;
    } else {
        r.verdict = Verdict::Inapplicable;
    }
    return r;
}

CriterionReport sign_test_Fa(double a, int grid, double tol) {
    require_a(a, "sign_test_Fa");
    require_grid(grid, "sign_test_Fa");
    if (!(tol >= 0.0)) throw ParameterDomainError("sign_test_Fa: tol must be >= 0");
    const double lo = a + 1.0, hi = a * a + 1.0;
    auto f = [a](double x) { return real_series<double>(FamilyKind::EulerF, a, true, x, 1e-17); };
    const auto m = detail::minimize_interior<double>(f, lo, hi, grid, 16 * kEps * hi);
    auto r = witness_report("sign_test_Fa", m, tol);
    r.details.emplace_back("interval_lo", lo);
    r.details.emplace_back("interval_hi", hi);
    return r;
}

CriterionReport sign_test_theta(double a, std::optional<int> n, int grid, double tol) {
    require_a(a, "sign_test_theta");
    require_grid(grid, "sign_test_theta");
    if (!(tol >= 0.0)) throw ParameterDomainError("sign_test_theta: tol must be >= 0");
    if (n && *n < 2) throw ParameterDomainError("sign_test_theta: section degree must be >= 2");
    const double lo = a, hi = a * a * a;
    detail::IntervalMinimum<double> m;
    if (n) {
        auto f = [a, k = *n](double x) { return real_section<double>(FamilyKind::PartialTheta, a, true, k, x); };
        m = detail::minimize_interior<double>(f, lo, hi, grid, 16 * kEps * hi);
    } else {
        auto f = [a](double x) { return real_series<double>(FamilyKind::PartialTheta, a, true, x, 1e-17); };
        m = detail::minimize_interior<double>(f, lo, hi, grid, 16 * kEps * hi);
    }
    auto r = witness_report(n ? "sign_test_theta_section" : "sign_test_theta", m, tol);
    r.details.emplace_back("a_squared", a * a);
    if (n) r.details.emplace_back("n", *n);
    return r;
}

namespace lemma4 {

double K(double y, double b, double c) { return 1.0 - y + y * y / b - y * y * y / (b * b * c); }

std::pair<double, double> critical_points(double b, double c) {
    if (!(c > 3.0)) throw ParameterDomainError("lemma4::critical_points: need c > 3");
    const double s = b * std::sqrt(c * (c - 3.0));
    return {(b * c - s) / 3.0, (b * c + s) / 3.0};
}

double reduced_inequality(double b, double c) {
    return b * b * c * c - 4 * b * b * c + 18 * b * c - 4 * b * c * c - 27;
}

double auxiliary_inequality(double b, double c) { return 27 - 9 * b * c + 2 * b * c * c; }

RealPolynomial octic() { return RealPolynomial::from_descending({1, -8, 15, 12, -21, -28, -43, -40, -16}); }

}  // namespace lemma4

double lemma4_threshold() {
    const auto roots = real_roots(lemma4::octic(), 3.0, 5.0, 1e-15);
    if (roots.size() != 1) throw ConsistencyError("lemma4_threshold: expected one root of the octic in [3, 5]");
    return roots.front();
}

namespace lemma5 {

double closed_form(double a) {
    const QuotientView qv = quotients(SeriesFamily::euler_f(a));
    const double q2 = qv.q(2), q3 = qv.q(3), q4 = qv.q(4), q5 = qv.q(5), q6 = qv.q(6);
    return 1.0 - 2.0 / 9.0 * q2 - 8.0 / 27.0 * q2 / q3 + 16.0 / 81.0 * q2 / (q3 * q3 * q4) -
           32.0 / 243.0 * q2 / (q3 * q3 * q3 * q4 * q4 * q5) +
           64.0 / 729.0 * q2 / (q3 * q3 * q3 * q3 * q4 * q4 * q4 * q5 * q5 * q6);
}

RealPolynomial printed_polynomial() {
    return RealPolynomial::from_descending({-162, 513, 567, -594, 567, 1134, 918, 822, 846, 228, 1927, 1125, 1142,
                                            750, 1030, 966, 1360, 567, -226, 729, 463});
}

RealPolynomial product_polynomial() {
    auto f = [](int k) { return RealPolynomial::monomial(k) + RealPolynomial{1.0}; };
    auto pow = [](RealPolynomial p, int e) {
        RealPolynomial out{1.0};
        for (int i = 0; i < e; ++i) out = out * p;
        return out;
    };
    const RealPolynomial p2 = f(2);
    return 729.0 * (f(1) * f(3) * f(4) * f(5) * f(6)) - 162.0 * (p2 * f(3) * f(4) * f(5) * f(6)) -
           216.0 * (pow(p2, 2) * f(4) * f(5) * f(6)) + 144.0 * (pow(p2, 3) * f(5) * f(6)) -
           96.0 * (pow(p2, 4) * f(6)) + 64.0 * pow(p2, 5);
}

}  // namespace lemma5

CriterionReport lemma5_test(double a) {
    require_a(a, "lemma5_test");
    const QuotientView qv = quotients(SeriesFamily::euler_f(a));
    const double q2 = qv.q(2);
    const double z0 = 2.0 / 3.0 * (a + 1.0) * q2;

    const double closed = lemma5::closed_form(a);
    const EvalResult direct = evaluate_section_bounded(SeriesFamily::euler_f(a).alternate(), 6, z0);
    // Bounds the sum of |terms| of the section at z_0.
    const double scale = 1.0 + 2.0 * q2;
    const double err = direct.abs_error_bound + 32.0 * kEps * scale;
    const double value = direct.value.real();
    if (std::abs(closed - value) > 1e-9 * scale) {
        std::ostringstream os;
        os.precision(17);
        os << "lemma5_test: closed form " << closed << " and direct section " << value << " disagree at a = " << a;
        throw ConsistencyError(os.str());
    }

    double multiplier = 729.0;
    for (int k : {1, 3, 4, 5, 6}) multiplier *= std::pow(a, k) + 1.0;
    const RealPolynomial product = lemma5::product_polynomial();
    const double product_value = product.eval_compensated(a);
    if (std::abs(value) > err) {
        const int s = certified_sign(product, a);
        if (s != (value > 0 ? 1 : -1)) {
            std::ostringstream os;
            os.precision(17);
            os << "lemma5_test: product polynomial sign disagrees with S_6(z_0) = " << value << " at a = " << a;
            throw ConsistencyError(os.str());
        }
    }
    if (std::abs(product_value / multiplier - value) > 1e-9 * scale) {
        throw ConsistencyError("lemma5_test: product polynomial / multiplier differs from S_6(z_0)");
    }

    CriterionReport r;
    r.criterion = "lemma5_test";
    r.witness_x = z0;
    r.witness_value = value;
    r.margin = value;
    r.error_bound = err;
    if (value < -err) {
        r.verdict = Verdict::InLP;
    } else if (value <= err) {
        r.verdict = Verdict::Boundary;
    } else {
        r.verdict = Verdict::Inapplicable;
    }
    r.details.emplace_back("closed_form", closed);
    r.details.emplace_back("direct", value);
    r.details.emplace_back("product_polynomial", product_value);
    r.details.emplace_back("printed_polynomial", lemma5::printed_polynomial().eval_compensated(a));
    return r;
}

CriterionReport classify_Fa(double a, double tol) {
    require_a(a, "classify_Fa");
    const SeriesFamily f = SeriesFamily::euler_f(a);
    std::vector<std::pair<std::string, double>> trail;
    auto note = [&trail](const CriterionReport& r) {
        trail.emplace_back(r.criterion + "_margin", r.margin);
    };
    auto finish = [&trail](CriterionReport r) {
        r.details.insert(r.details.begin(), trail.begin(), trail.end());
        return r;
    };

    const auto nec = necessary_q2(f);
    if (nec.verdict == Verdict::NotInLP) return finish(nec);
    note(nec);
    const auto hut = hutchinson_test(f);
    if (hut.verdict == Verdict::InLP) return finish(hut);
    note(hut);
    const auto l5 = lemma5_test(a);
    if (l5.verdict == Verdict::InLP) return finish(l5);
    note(l5);
    return finish(sign_test_Fa(a, 512, tol));
}

}  // namespace lpzero
