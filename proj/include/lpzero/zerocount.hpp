#pragma once

// Zero counting in disks by the argument principle, Rouché radii, and
// minima of |f| on circles.
//
// Radii are in the variable of the family passed in. Use
// family.alternate().normalize() to count in the u-plane of
// phi(u) = sum (-1)^k u^k / (q_2^{k-1} ... q_k); z = -u (a_0 / a_1) maps
// back to the original function.

#include <optional>

#include "lpzero/series.hpp"

namespace lpzero {

struct WindingResult {
    double radius = 0.0;
    int count = 0;
    /// Distance of the raw winding number to the nearest integer, in turns.
    double residual = 0.0;
    double min_modulus_seen = 0.0;
    int samples_used = 0;
    bool certified = false;
    /// Largest argument increment between neighbouring samples.
    double max_step = 0.0;
    /// Largest evaluation error bound seen on the circle.
    double error_bound = 0.0;
};

inline constexpr int kMaxWindingSamples = 1 << 20;

/// rho_j = q_2 ... q_j sqrt(q_{j+1}); j = 1 gives sqrt(q_2). Computed in log
/// space. This is a radius in the normalized variable u.
double rho_radius(const SeriesFamily& family, int j);

/// Winding number of the family over |z| = r. Samples double from
/// base_samples until every argument increment is below pi/2 and one more
/// doubling leaves the count unchanged. If |f| on the circle is not clear of
/// the evaluation error the radius is perturbed by r*(1 +- k*1e-6),
/// k = 1..5, before ZeroOnCircleError is thrown. A result that hits the
/// sample cap is returned with certified = false.
WindingResult count_zeros_in_disk(const SeriesFamily& family, double r, int base_samples = 256);

struct CircleMinimum {
    /// The analytic value when it applies, otherwise the numeric one.
    double value = 0.0;
    double numeric = 0.0;
    std::optional<double> analytic;
    /// Argument at which the numeric minimum was found.
    double theta = 0.0;
};

/// min |f(r e^{i theta})| for the full series or the degree-n_section
/// section: grid scan plus golden-section refinement. For n_section = 2 on
/// the circle |u| = q_2 the closed form
///   xi(t) = 4 q_2 t^2 - 2 q_2 (1 + q_2) t + 1 - 2 q_2 + 2 q_2^2,  t = cos theta
/// (which equals |S_2|^2) is minimized over [-1, 1] as well, and its value is
/// returned when q_2 is in [3, 4).
CircleMinimum min_modulus_on_circle(const SeriesFamily& family, std::optional<int> n_section, double r,
                                    int grid = 512);

/// Modulus sqrt((a+1)(a^2+1)) of the complex zeros of the quadratic section
/// of F_a. Throws RealRootsError when a^2 - 4a - 3 >= 0.
double s2_root_modulus(double a);

}  // namespace lpzero
