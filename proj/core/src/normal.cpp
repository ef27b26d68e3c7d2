#include "tci/normal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tci {

namespace {
constexpr double inv_sqrt_2pi = 0.3989422804014326779;
constexpr double sqrt_2 = std::numbers::sqrt2;
} // namespace

double std_normal_pdf(double z) {
    return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

double std_normal_cdf(double z) {
    return 0.5 * std::erfc(-z / sqrt_2);
}

double std_normal_log_cdf(double z) {
    if (z > -36.0) {
        // erfc stays normal here; its log is exact enough.
        return std::log(0.5 * std::erfc(-z / sqrt_2));
    }
    // Deep left tail: Phi(z) ~ pdf(z)/|z| * (1 - 1/z^2 + 3/z^4 - 15/z^6).
    const double z2 = z * z;
    const double series = 1.0 - 1.0 / z2 + 3.0 / (z2 * z2) - 15.0 / (z2 * z2 * z2);
    return -0.5 * z2 - std::log(-z) + std::log(inv_sqrt_2pi * series);
}

double std_normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("std_normal_quantile: p must lie in (0,1)");

    // Bracket the root, shrink by bisection, then polish with Newton steps.
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 80 && hi - lo > 1e-6; ++i) {
        const double mid = 0.5 * (lo + hi);
        (std_normal_cdf(mid) < p ? lo : hi) = mid;
    }
    double z = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        const double density = std_normal_pdf(z);
        if (density <= 0.0)
            break;
        const double step = (std_normal_cdf(z) - p) / density;
        z -= step;
        if (std::abs(step) < 1e-15)
            break;
    }
    return z;
}

TargetDist::TargetDist(double M_, double delta_, double T_) : M(M_), delta(delta_), T(T_) {
    if (!(delta > 0.0))
        throw std::invalid_argument("TargetDist: delta must be > 0");
    if (!(T > 0.0))
        throw std::invalid_argument("TargetDist: T must be > 0");
    if (!std::isfinite(M))
        throw std::invalid_argument("TargetDist: M must be finite");
}

RiskMeasures var_es(const TargetDist& target, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("var_es: alpha must lie in (0,1)");
    const double mean = target.M * target.T;
    const double sd = target.delta * std::sqrt(target.T);
    const double q = std_normal_quantile(alpha);
    return RiskMeasures{
        -mean + sd * q,
        -mean + sd * std_normal_pdf(q) / (1.0 - alpha),
        alpha,
    };
}

} // namespace tci
