#pragma once

// Grid checks of the inequalities behind the zero-counting and threshold
// arguments. Every check records each inequality as lhs (>= or >) rhs with
// a certified margin; a point that violates a stated hypothesis is counted
// as inapplicable and skipped unless enforce_hypotheses is false, in which
// case it is evaluated anyway (expected-fail fixtures rely on this).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lpzero {

struct CheckFailure {
    std::vector<std::pair<std::string, double>> params;
    std::string inequality;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct LemmaCheckResult {
    std::string lemma;
    int grid_points = 0;
    int inequalities = 0;
    int inapplicable = 0;
    std::vector<CheckFailure> failures;
    /// Smallest certified slack; +inf when nothing was evaluated.
    double worst_margin = 0.0;
    std::vector<std::string> notes;

    bool passed() const noexcept { return failures.empty(); }
};

/// Quadratic section on |z| = a^2 + 1: numeric min |S_2| = 1 within 1e-8,
/// xi discriminant q_2 (q_2 - 1)^2 (q_2 - 4) < 0, vertex (1 + q_2)/4 >= 1.
/// Hypothesis: q_2 in [3, 4).
LemmaCheckResult check_lemma2(const std::vector<double>& a_grid, bool enforce_hypotheses = true);

/// Tail majorant of terms k >= 3 on |z| = a^2 + 1 is < 1, computed by
/// tail_bound and by the closed form (a^2+1)^2/((a+1)(a^3+1)) (a^4+1)/(a^4-a^2);
/// the two must agree to 1e-9. Hypothesis: a > 3.16259.
LemmaCheckResult check_rouche_gap(const std::vector<double>& a_grid, bool enforce_hypotheses = true);

/// For j in [j_lo, j_hi] (within [4, 40]): the Rouché inequality between the
/// five-term block and the rest on |z| = rho_j, positivity of
/// psi_j(t) = 4t^2 - 2 q_j sqrt(q_{j+1}) t + q_j q_{j+1} - 2 on [-1, 1] with
/// vertex q_j sqrt(q_{j+1})/4 > 1, and ratios < 1 of both geometric
/// majorants. Once per call, the limiting form with q = a. Hypothesis:
/// a > 3.56.
LemmaCheckResult check_lemma3_inequalities(double a, int j_lo, int j_hi, bool enforce_hypotheses = true);

/// For k = 2..k_max (<= 30): (-1)^k phi(rho_k) >= -error, the seven-term
/// minorant mu_k >= 0, nu_k >= 0 for k >= 3, and the quintic in sqrt(q_{k+1})
/// >= 0; per a, q_2/q_4 >= 0.8. Hypothesis: a >= 3.
LemmaCheckResult check_lemma6(const std::vector<double>& a_grid, int k_max, bool enforce_hypotheses = true);

/// f_a and S_n for n in n_list positive on [0, a+1] (2048-point grid with
/// local refinement), plus the term chain 1 >= x/(a+1) > x^2/((a+1)(a^2+1)) > ...
/// at x = a+1.
LemmaCheckResult check_positivity_interval(const std::vector<double>& a_grid, const std::vector<int>& n_list);

/// Random a in (3.6, 4.6), b = q_2, c = q_3: sign(K(y_1)) against the
/// reduced inequality, the auxiliary inequality, y_1 in (1, b), y_2 > b, and
/// reduced = octic / ((a+1)^2 (a^2+1)).
LemmaCheckResult check_lemma4_algebra(int samples, std::uint64_t seed = 1);
/// Same checks on given a values.
LemmaCheckResult check_lemma4_algebra_at(const std::vector<double>& a_grid);

}  // namespace lpzero
