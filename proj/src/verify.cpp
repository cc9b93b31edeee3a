#include "lpzero/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "lpzero/criteria.hpp"
#include "lpzero/series.hpp"
#include "lpzero/zerocount.hpp"

namespace lpzero {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Records inequalities for one parameter point. Margins are relative:
// (lhs - rhs +- err) / max(1, |lhs|, |rhs|).
class Recorder {
public:
    Recorder(LemmaCheckResult& result, std::vector<std::pair<std::string, double>> params)
        : result_(result), params_(std::move(params)) {}

    /// lhs >= rhs, allowing err of slack.
    void at_least(const std::string& name, double lhs, double rhs, double err = 0.0) {
        record(name, lhs, rhs, (lhs - rhs + err) / scale(lhs, rhs), false);
    }

    /// lhs > rhs, certified: the gap must exceed err.
    void greater(const std::string& name, double lhs, double rhs, double err = 0.0) {
        record(name, lhs, rhs, (lhs - rhs - err) / scale(lhs, rhs), true);
    }

private:
    static double scale(double lhs, double rhs) { return std::max({1.0, std::abs(lhs), std::abs(rhs)}); }

    void record(const std::string& name, double lhs, double rhs, double margin, bool strict) {
        if (!std::isfinite(margin)) margin = -std::numeric_limits<double>::infinity();
        if (strict && margin == 0.0) margin = -std::numeric_limits<double>::denorm_min();
        ++result_.inequalities;
        result_.worst_margin = std::min(result_.worst_margin, margin);
        if (margin < 0.0) result_.failures.push_back({params_, name, lhs, rhs});
    }

    LemmaCheckResult& result_;
    std::vector<std::pair<std::string, double>> params_;
};

LemmaCheckResult start(std::string name) {
    LemmaCheckResult r;
    r.lemma = std::move(name);
    r.worst_margin = std::numeric_limits<double>::infinity();
    return r;
}

void require_a(double a, const char* where) {
    if (!(a > 1.0) || !std::isfinite(a)) throw ParameterDomainError(std::string(where) + ": every a must be > 1");
}

// Minimum of v over [lo, hi] by scan plus golden refinement near the best
// sample when it comes close to the error level.
template <class F>
std::pair<double, double> scan_minimum(F&& v, double lo, double hi, int points) {
    double best = std::numeric_limits<double>::infinity(), best_err = 0.0;
    int best_i = 0;
    for (int i = 0; i < points; ++i) {
        const auto [val, err] = v(lo + (hi - lo) * i / (points - 1));
        if (val - err < best - best_err) {
            best = val;
            best_err = err;
            best_i = i;
        }
    }
    if (best < 10.0 * best_err) {
        const double h = (hi - lo) / (points - 1);
        double a = std::max(lo, lo + h * (best_i - 1)), b = std::min(hi, lo + h * (best_i + 1));
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int it = 0; it < 100; ++it) {
            const double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
            const auto v1 = v(x1), v2 = v(x2);
            for (const auto& [val, err] : {v1, v2}) {
                if (val - err < best - best_err) {
                    best = val;
                    best_err = err;
                }
            }
            (v1.first < v2.first ? b : a) = v1.first < v2.first ? x2 : x1;
        }
    }
    return {best, best_err};
}

}  // namespace

LemmaCheckResult check_lemma2(const std::vector<double>& a_grid, bool enforce_hypotheses) {
    auto result = start("lemma2");
    for (double a : a_grid) {
        require_a(a, "check_lemma2");
        ++result.grid_points;
        const double q2 = quotients(SeriesFamily::euler_f(a)).q(2);
        if (enforce_hypotheses && !(q2 >= 3.0 && q2 < 4.0)) {
            ++result.inapplicable;
            continue;
        }
        Recorder rec(result, {{"a", a}, {"q2", q2}});
        const auto m = min_modulus_on_circle(SeriesFamily::euler_f(a).alternate(), 2, a * a + 1.0, 512);
        rec.at_least("|min|S_2| - 1| <= 1e-8", 1e-8, std::abs(m.numeric - 1.0));
        const double disc = q2 * (q2 - 1) * (q2 - 1) * (q2 - 4);
        rec.greater("q2 (q2-1)^2 (q2-4) < 0", 0.0, disc, 8 * kEps * q2 * q2 * q2 * q2);
        rec.at_least("(1+q2)/4 >= 1", (1 + q2) / 4, 1.0, 4 * kEps);
    }
    return result;
}

LemmaCheckResult check_rouche_gap(const std::vector<double>& a_grid, bool enforce_hypotheses) {
    auto result = start("rouche");
    for (double a : a_grid) {
        require_a(a, "check_rouche_gap");
        ++result.grid_points;
        if (enforce_hypotheses && !(a > 3.16259)) {
            ++result.inapplicable;
            continue;
        }
        Recorder rec(result, {{"a", a}});
        const double r = a * a + 1.0;
        const double bound = tail_bound(SeriesFamily::euler_f(a).alternate(), 3, r);
        const double a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
        const double closed = (a2 + 1) * (a2 + 1) / ((a + 1) * (a3 + 1)) * (a4 + 1) / (a4 - a2);
        rec.at_least("tail_bound agrees with closed form to 1e-9", 1e-9, std::abs(bound - closed) / closed);
        rec.greater("tail bound on |z| = a^2+1 < 1", 1.0, bound, 16 * kEps);
    }
    return result;
}

LemmaCheckResult check_lemma3_inequalities(double a, int j_lo, int j_hi, bool enforce_hypotheses) {
    require_a(a, "check_lemma3_inequalities");
    if (j_lo < 4 || j_hi > 40 || j_lo > j_hi) {
        throw ParameterDomainError("check_lemma3_inequalities: need 4 <= j_lo <= j_hi <= 40");
    }
    auto result = start("lemma3");
    result.notes.push_back(
        "vertex of psi_j taken as q_j sqrt(q_{j+1})/4, the form consistent with psi_j's linear coefficient; the "
        "displayed q_j sqrt(q_j+1)/4 differs");
    if (enforce_hypotheses && !(a > 3.56)) {
        result.grid_points = j_hi - j_lo + 2;
        result.inapplicable = result.grid_points;
        return result;
    }
    const QuotientView qv = quotients(SeriesFamily::euler_f(a));
    auto q = [&qv](int n) { return qv.q(n); };
    for (int j = j_lo; j <= j_hi; ++j) {
        ++result.grid_points;
        Recorder rec(result, {{"a", a}, {"j", j}});
        const double s1 = std::sqrt(q(j + 1));
        const double lhs = q(j - 1) * q(j) * s1 * (2 - 2 * q(j) * s1 + q(j) * q(j + 1));
        const double r1 = 1.0 / (q(j - 2) * q(j - 1) * q(j) * s1);
        const double r2 = 1.0 / (s1 * q(j + 2) * q(j + 3) * q(j + 4));
        const double rhs = 1.0 / (1.0 - r1) + q(j - 1) * q(j) * q(j) / (q(j + 2) * q(j + 2) * q(j + 3)) / (1.0 - r2) +
                           q(j - 1) * q(j) * s1 * (q(j) / q(j + 2) - 1.0);
        rec.greater("block dominates remainder on |u| = rho_j", lhs, rhs, 64 * kEps * std::abs(lhs));

        const double tv = q(j) * s1 / 4.0;
        rec.greater("vertex q_j sqrt(q_{j+1})/4 > 1", tv, 1.0, 4 * kEps * tv);
        auto psi = [&](double t) { return 4 * t * t - 2 * q(j) * s1 * t + (q(j) * q(j + 1) - 2); };
        const double psi_min = psi(std::clamp(tv, -1.0, 1.0));
        rec.greater("min psi_j on [-1,1] > 0", psi_min, 0.0, 16 * kEps * q(j) * q(j + 1));
        rec.greater("Sigma_1 majorant ratio < 1", 1.0, r1, 8 * kEps);
        rec.greater("Sigma_2 majorant ratio < 1", 1.0, r2, 8 * kEps);
    }

    ++result.grid_points;
    Recorder rec(result, {{"a", a}, {"limit", 1}});
    const double sa = std::sqrt(a);
    const double lhs = a * a * sa * (2 - 2 * a * sa + a * a);
    const double rhs = 2.0 / (1.0 - 1.0 / (a * a * a * sa));
    rec.greater("limiting form with q = a", lhs, rhs, 64 * kEps * std::abs(lhs));
    return result;
}

LemmaCheckResult check_lemma6(const std::vector<double>& a_grid, int k_max, bool enforce_hypotheses) {
    if (k_max < 2 || k_max > 30) throw ParameterDomainError("check_lemma6: k_max must be in [2, 30]");
    auto result = start("lemma6");
    result.notes.push_back("q_2/q_4 >= 0.8 is stated for a >= 0 in the source text; checked on the a >= 3 grid only");
    result.notes.push_back("nu_k needs q_{k-1}, so it is checked for k >= 3");
    for (double a : a_grid) {
        require_a(a, "check_lemma6");
        if (enforce_hypotheses && !(a >= 3.0)) {
            result.grid_points += k_max - 1;
            result.inapplicable += k_max - 1;
            continue;
        }
        const SeriesFamily phi = SeriesFamily::euler_f(a).alternate().normalize();
        const QuotientView qv = quotients(phi);
        auto q = [&qv](int n) { return qv.q(n); };
        {
            Recorder rec(result, {{"a", a}});
            const double a2 = a * a, a3 = a2 * a, a4 = a2 * a2, a5 = a4 * a;
            const double closed = (a5 + a3 + a2 + 1) / (a5 + a4 + a + 1);
            rec.at_least("q2/q4 closed form agrees to 1e-9", 1e-9, std::abs(closed - q(2) / q(4)) / closed);
            rec.at_least("q2/q4 >= 0.8", closed, 0.8, 8 * kEps);
        }
        for (int k = 2; k <= k_max; ++k) {
            ++result.grid_points;
            Recorder rec(result, {{"a", a}, {"k", k}});
            const double sign = k % 2 == 0 ? 1.0 : -1.0;
            const double rho = rho_radius(phi, k);
            const EvalResult e = evaluate(phi, rho);
            const double value = sign * e.value.real();
            rec.at_least("(-1)^k phi(rho_k) >= 0", value, 0.0, e.abs_error_bound);

            // Seven central terms, negative indices dropped.
            double mu = 0.0, mu_err = 0.0;
            const double log_rho = std::log(rho);
            for (int j = std::max(0, k - 3); j <= k + 3; ++j) {
                const double log_t = j * log_rho + coefficient_log(phi, j);
                const double t = std::exp(log_t);
                mu += ((j + k) % 2 == 0 ? 1.0 : -1.0) * t;
                mu_err += 8 * kEps * t * (8 + std::abs(log_t));
            }
            rec.at_least("mu_k >= 0", mu, 0.0, mu_err);
            rec.at_least("(-1)^k phi(rho_k) >= mu_k", value, mu, mu_err + e.abs_error_bound);

            const double s = std::sqrt(q(k + 1));
            if (k >= 3) {
                const double c = q(k - 1) * q(k) * q(k);
                const double nu = -1 + q(k - 1) * q(k) * s - 2 * c * q(k + 1) + c * q(k + 1) * s + c * s / q(k + 2) -
                                  c / (q(k + 2) * q(k + 2) * q(k + 3));
                rec.at_least("nu_k >= 0", nu, 0.0, 64 * kEps * c * q(k + 1) * s);
            }
            const double reduced = q(k) * q(k + 1) * (s - 2) + 1.8 * s - 2.0 / 9.0;
            rec.at_least("q_k q_{k+1}(sqrt(q_{k+1}) - 2) + 1.8 sqrt(q_{k+1}) - 2/9 >= 0", reduced, 0.0,
                         32 * kEps * q(k) * q(k + 1) * s);
            const double quintic = s * s * s * s * s - 2 * s * s * s * s + 1.8 * s - 2.0 / 9.0;
            rec.at_least("t^5 - 2t^4 + 1.8t - 2/9 >= 0 at t = sqrt(q_{k+1})", quintic, 0.0, 32 * kEps * std::pow(s, 5));
        }
    }
    return result;
}

LemmaCheckResult check_positivity_interval(const std::vector<double>& a_grid, const std::vector<int>& n_list) {
    constexpr int kPoints = 2048;
    auto result = start("positivity");
    for (int n : n_list)
        if (n < 0) throw ParameterDomainError("check_positivity_interval: section degrees must be >= 0");
    for (double a : a_grid) {
        require_a(a, "check_positivity_interval");
        const SeriesFamily f = SeriesFamily::euler_f(a).alternate();
        {
            ++result.grid_points;
            Recorder rec(result, {{"a", a}, {"n", -1}});
            const auto [m, err] = scan_minimum(
                [&f](double x) {
                    const auto e = evaluate(f, x);
                    return std::pair{e.value.real(), e.abs_error_bound};
                },
                0.0, a + 1.0, kPoints);
            rec.greater("f_a(x) > 0 on [0, a+1]", m, 0.0, err);
        }
        for (int n : n_list) {
            ++result.grid_points;
            Recorder rec(result, {{"a", a}, {"n", n}});
            const auto [m, err] = scan_minimum(
                [&f, n](double x) {
                    const auto e = evaluate_section_bounded(f, n, x);
                    return std::pair{e.value.real(), e.abs_error_bound};
                },
                0.0, a + 1.0, kPoints);
            rec.greater("S_n(x) > 0 on [0, a+1]", m, 0.0, err);
        }
        // Term chain at the right endpoint.
        ++result.grid_points;
        const double x = a + 1.0;
        double t = 1.0;
        for (int k = 1; k <= 30; ++k) {
            const double next = t * x * coefficient_ratio(f, k);
            Recorder rec(result, {{"a", a}, {"k", k}});
            if (k == 1) {
                rec.at_least("1 >= x/(a+1) at x = a+1", 1.0, next, 4 * kEps);
            } else {
                rec.greater("term k-1 > term k at x = a+1", t, next, 8 * kEps * k * t);
            }
            t = next;
        }
    }
    return result;
}

LemmaCheckResult check_lemma4_algebra_at(const std::vector<double>& a_grid) {
    auto result = start("4algebra");
    const RealPolynomial oct = lemma4::octic();
    for (double a : a_grid) {
        require_a(a, "check_lemma4_algebra");
        ++result.grid_points;
        const QuotientView qv = quotients(SeriesFamily::euler_f(a));
        const double b = qv.q(2), c = qv.q(3);
        if (!(c > 3.0) || !(b < c)) {
            ++result.inapplicable;
            continue;
        }
        Recorder rec(result, {{"a", a}, {"b", b}, {"c", c}});
        const auto [y1, y2] = lemma4::critical_points(b, c);
        const double k1 = lemma4::K(y1, b, c);
        const double red = lemma4::reduced_inequality(b, c);
        const double k_scale = 1 + y1 + y1 * y1 / b + y1 * y1 * y1 / (b * b * c);
        const double r_scale = b * b * c * c + 4 * b * b * c + 18 * b * c + 4 * b * c * c + 27;
        const double err = 64 * kEps * (k_scale * std::abs(red) + r_scale * std::abs(k1) + k_scale * r_scale * kEps);
        rec.at_least("K(y_1) <= 0 iff reduced >= 0 (K(y_1) * reduced <= 0)", -k1 * red, 0.0, err);
        rec.at_least("27 - 9bc + 2bc^2 >= 0", lemma4::auxiliary_inequality(b, c), 0.0, 64 * kEps * r_scale);
        rec.greater("y_1 > 1", y1, 1.0, 16 * kEps * y1);
        rec.greater("y_1 < b", b, y1, 16 * kEps * b);
        rec.greater("y_2 > b", y2, b, 16 * kEps * y2);
        const double via_octic = oct.eval_compensated(a) / ((a + 1) * (a + 1) * (a * a + 1));
        rec.at_least("reduced = octic / ((a+1)^2 (a^2+1)) to 1e-9", 1e-9 * r_scale, std::abs(via_octic - red));
    }
    return result;
}

LemmaCheckResult check_lemma4_algebra(int samples, std::uint64_t seed) {
    if (samples < 10) throw ParameterDomainError("check_lemma4_algebra: samples must be >= 10");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(3.6, 4.6);
    std::vector<double> grid(static_cast<std::size_t>(samples));
    for (auto& a : grid) a = dist(rng);
    return check_lemma4_algebra_at(grid);
}

}  // namespace lpzero
