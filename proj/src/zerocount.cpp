#include "lpzero/zerocount.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace lpzero {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct CircleSample {
    std::complex<double> value;
    double error;
};

CircleSample sample(const SeriesFamily& family, double r, double theta) {
    const auto e = evaluate(family, std::polar(r, theta));
    return {e.value, e.abs_error_bound};
}

struct WindingPass {
    double turns = 0.0;
    double max_step = 0.0;
    double min_modulus = std::numeric_limits<double>::infinity();
    double error = 0.0;
};

WindingPass wind(const std::vector<CircleSample>& samples) {
    WindingPass out;
    const std::size_t n = samples.size();
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& cur = samples[k];
        const auto& next = samples[(k + 1) % n];
        const double step = std::arg(next.value / cur.value);
        total += step;
        out.max_step = std::max(out.max_step, std::abs(step));
        out.min_modulus = std::min(out.min_modulus, std::abs(cur.value));
        out.error = std::max(out.error, cur.error);
    }
    out.turns = total / kTwoPi;
    return out;
}

// One radius, no perturbation. Returns false if the circle passes too close
// to a zero.
bool wind_at(const SeriesFamily& family, double r, int base_samples, WindingResult& result) {
    std::vector<CircleSample> samples(static_cast<std::size_t>(base_samples));
    for (int k = 0; k < base_samples; ++k) samples[k] = sample(family, r, kTwoPi * k / base_samples);

    WindingPass pass = wind(samples);
    int previous = -1;
    bool stable = false;
    while (true) {
        if (!(pass.min_modulus > 10.0 * pass.error)) break;
        const int count = static_cast<int>(std::lround(pass.turns));
        if (pass.max_step < kPi / 2.0) {
            if (count == previous) {
                stable = true;
                break;
            }
            previous = count;
        }
        const std::size_t n = samples.size();
        if (2 * n > static_cast<std::size_t>(kMaxWindingSamples)) break;
        std::vector<CircleSample> finer(2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            finer[2 * k] = samples[k];
            finer[2 * k + 1] = sample(family, r, kTwoPi * (2 * k + 1) / (2.0 * n));
        }
        samples = std::move(finer);
        pass = wind(samples);
    }

    result.radius = r;
    result.count = std::max(0, static_cast<int>(std::lround(pass.turns)));
    result.residual = std::abs(pass.turns - std::round(pass.turns));
    result.min_modulus_seen = pass.min_modulus;
    result.samples_used = static_cast<int>(samples.size());
    result.max_step = pass.max_step;
    result.error_bound = pass.error;
    const bool clear = pass.min_modulus > 10.0 * pass.error;
    result.certified = clear && stable && result.residual < 0.05 && pass.turns > -0.5;
    return clear;
}

}  // namespace

double rho_radius(const SeriesFamily& family, int j) {
    if (j < 1) throw ParameterDomainError("rho_radius: j must be >= 1");
    const QuotientView qv = quotients(family);
    if (j + 1 > qv.max_index()) throw InsufficientDataError("rho_radius: q_{j+1} is not defined for this family");
    double log_rho = 0.5 * qv.log_q(j + 1);
    for (int i = 2; i <= j; ++i) log_rho += qv.log_q(i);
    return std::exp(log_rho);
}

WindingResult count_zeros_in_disk(const SeriesFamily& family, double r, int base_samples) {
    family.validate();
    if (!(r > 0.0) || !std::isfinite(r)) throw ParameterDomainError("count_zeros_in_disk: radius must be > 0");
    if (base_samples < 8) throw ParameterDomainError("count_zeros_in_disk: base_samples must be >= 8");

    WindingResult result;
    for (int attempt = 0; attempt <= 5; ++attempt) {
        // r, r(1+1e-6), r(1-1e-6), r(1+2e-6), ...
        const int k = (attempt + 1) / 2;
        const double sign = attempt % 2 == 1 ? 1.0 : -1.0;
        const double radius = r * (1.0 + sign * k * 1e-6);
        if (wind_at(family, radius, base_samples, result)) return result;
    }
    std::ostringstream os;
    os << "count_zeros_in_disk: |f| on |z| = " << r << " (and 5 perturbed radii) is not clear of the evaluation "
       << "error; min |f| = " << result.min_modulus_seen << ", error bound = " << result.error_bound;
    throw ZeroOnCircleError(os.str());
}

CircleMinimum min_modulus_on_circle(const SeriesFamily& family, std::optional<int> n_section, double r, int grid) {
    family.validate();
    if (!(r > 0.0) || !std::isfinite(r)) throw ParameterDomainError("min_modulus_on_circle: radius must be > 0");
    if (grid < 64) throw ParameterDomainError("min_modulus_on_circle: grid must be >= 64");
    if (n_section && *n_section < 0) throw ParameterDomainError("min_modulus_on_circle: section degree must be >= 0");

    auto modulus = [&](double theta) {
        const std::complex<double> z = std::polar(r, theta);
        return std::abs(n_section ? evaluate_section(family, *n_section, z) : evaluate(family, z).value);
    };

    int best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    const double h = kTwoPi / grid;
    for (int k = 0; k < grid; ++k) {
        const double v = modulus(k * h);
        if (v < best_value) {
            best_value = v;
            best = k;
        }
    }

    // Golden section on the two neighbouring cells.
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = (best - 1) * h, hi = (best + 1) * h;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = modulus(x1), f2 = modulus(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = modulus(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = modulus(x2);
        }
    }
    CircleMinimum out;
    out.numeric = best_value;
    out.theta = best * h;
    for (auto [x, f] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
        if (f < out.numeric) {
            out.numeric = f;
            out.theta = x;
        }
    }
    out.value = out.numeric;

    if (n_section && *n_section == 2 && family.polynomial_degree() != 1 && family.polynomial_degree() != 0) {
        const double q2 = quotients(family).q(2);
        const double u_radius = family.normalized ? r : r * coefficient_ratio(family, 1);
        if (std::abs(u_radius - q2) <= 1e-12 * q2) {
            auto xi = [q2](double t) { return 4 * q2 * t * t - 2 * q2 * (1 + q2) * t + 1 - 2 * q2 + 2 * q2 * q2; };
            const double tv = (1 + q2) / 4;
            const double t_min = std::clamp(tv, -1.0, 1.0);
            out.analytic = std::sqrt(std::max(0.0, xi(t_min)));
            if (q2 >= 3.0 && q2 < 4.0) out.value = *out.analytic;
        }
    }
    return out;
}

double s2_root_modulus(double a) {
    if (!(a > 1.0) || !std::isfinite(a)) throw ParameterDomainError("s2_root_modulus: a must be > 1");
    const double d = a * a - 4 * a - 3;
    if (d >= 0.0) {
        std::ostringstream os;
        os << "s2_root_modulus: a^2 - 4a - 3 = " << d << " >= 0, the quadratic section has real zeros";
        throw RealRootsError(os.str());
    }
    const double m = std::sqrt((a + 1) * (a * a + 1));
    if (!(m < a * a + 1)) throw ConsistencyError("s2_root_modulus: modulus is not inside |z| < a^2 + 1");
    return m;
}

}  // namespace lpzero
