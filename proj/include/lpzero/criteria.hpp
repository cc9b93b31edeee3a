#pragma once

// Membership tests for the Laguerre-Pólya class.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpzero/polynomial.hpp"
#include "lpzero/series.hpp"

namespace lpzero {

enum class Verdict { InLP, NotInLP, Boundary, Inapplicable };

std::string to_string(Verdict verdict);

struct CriterionReport {
    std::string criterion;
    Verdict verdict = Verdict::Inapplicable;
    /// Set only by witness-based tests.
    std::optional<double> witness_x;
    std::optional<double> witness_value;
    /// Signed distance of the decisive quantity from its threshold.
    double margin = 0.0;
    /// Combined numerical error the margin was compared against.
    double error_bound = 0.0;
    std::vector<std::pair<std::string, double>> details;

    std::optional<double> detail(const std::string& key) const;
};

/// q_n >= 4 for every n >= 2 (all sections real-rooted, hence InLP). The
/// check extends to all n through the closed-form monotonicity of q_n: q_2
/// for F_a, a^2 for g_a, the limit a for h_a. A custom polynomial is checked
/// over all its quotients when n_max covers them. Failing the test gives
/// Inapplicable: the condition is sufficient only.
CriterionReport hutchinson_test(const SeriesFamily& family, int n_max = 50);

/// q_2 >= 3 is necessary for membership. NotInLP if q_2 < 3, Boundary at
/// q_2 = 3, otherwise Inapplicable. Throws PreconditionError unless q_n is
/// increasing.
CriterionReport necessary_q2(const SeriesFamily& family);

/// min of F_a(-x) over the open interval (a+1, a^2+1): InLP if the minimum
/// is below -(tol + error), NotInLP if above, Boundary in between.
CriterionReport sign_test_Fa(double a, int grid = 512, double tol = 1e-12);

/// Same contract for g_a(-x), or its degree-n section, over (a, a^3).
CriterionReport sign_test_theta(double a, std::optional<int> n = std::nullopt, int grid = 512, double tol = 1e-12);

namespace lemma4 {

/// K(y) = 1 - y + y^2/b - y^3/(b^2 c), the cubic section in y = z/(a+1).
double K(double y, double b, double c);
/// (y_1, y_2) = (bc -+ b sqrt(c(c-3))) / 3. Needs c > 3.
std::pair<double, double> critical_points(double b, double c);
/// b^2c^2 - 4b^2c + 18bc - 4bc^2 - 27; >= 0 iff K(y_1) <= 0.
double reduced_inequality(double b, double c);
/// 27 - 9bc + 2bc^2.
double auxiliary_inequality(double b, double c);
/// a^8 - 8a^7 + 15a^6 + 12a^5 - 21a^4 - 28a^3 - 43a^2 - 40a - 16.
RealPolynomial octic();

}  // namespace lemma4

/// Root of the octic in [3, 5]: the cubic section can dip to zero on
/// (a+1, a^2+1) only above it.
double lemma4_threshold();

namespace lemma5 {

/// S_6 of F_a(-z) at z_0 = (2/3)(a+1) q_2, from the quotients.
double closed_form(double a);
/// The degree-20 polynomial as printed (descending coefficients
/// -162, 513, 567, -594, ...).
RealPolynomial printed_polynomial();
/// The product form
///   729 (a+1)(a^3+1)(a^4+1)(a^5+1)(a^6+1) - 162 (a^2+1)(a^3+1)(a^4+1)(a^5+1)(a^6+1)
///   - 216 (a^2+1)^2 (a^4+1)(a^5+1)(a^6+1) + 144 (a^2+1)^3 (a^5+1)(a^6+1)
///   - 96 (a^2+1)^4 (a^6+1) + 64 (a^2+1)^5,
/// which is S_6(z_0) times 729 (a+1)(a^3+1)(a^4+1)(a^5+1)(a^6+1). It differs
/// from printed_polynomial(); see README.
RealPolynomial product_polynomial();

}  // namespace lemma5

/// Sufficient test S_6(z_0) <= 0. InLP when certified negative, Boundary
/// within the error, otherwise Inapplicable. The closed form, the direct
/// section sum and the product polynomial must agree (ConsistencyError).
CriterionReport lemma5_test(double a);

/// necessary_q2 -> hutchinson_test -> lemma5_test -> sign_test_Fa; the
/// first decisive verdict wins and sign_test_Fa always decides. tol goes to
/// the sign test.
CriterionReport classify_Fa(double a, double tol = 1e-12);

}  // namespace lpzero
