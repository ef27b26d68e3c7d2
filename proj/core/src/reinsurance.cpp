#include "tci/reinsurance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tci/errors.hpp"
#include "tci/quadrature.hpp"

namespace tci {

namespace {

double clamp_probability(double p, std::string& note, const char* where) {
    if (p < -1e-9 || p > 1.0 + 1e-9) {
        if (!note.empty())
            note += "; ";
        note += std::string("clamped ") + where + " by more than 1e-9";
    }
    return std::clamp(p, 0.0, 1.0);
}

// q = (M + lambda mu (theta - eta)) / (lambda mu theta); pairs sum to 2q.
double half_sum(const ReinsuranceModel& model, double M) {
    return (M + model.lambda * model.mu * (model.theta - model.eta)) /
           (model.lambda * model.mu * model.theta);
}

void validate_pair_order(const ReinsuranceModel& model, const TargetDist& target, double first,
                         double second) {
    const double q = half_sum(model, target.M);
    const double quad = 2.0 * target.delta * target.delta / (model.lambda * model.mu2);
    if (first < -1e-9 || first > 1.0 + 1e-9 || second < -1e-9 || second > 1.0 + 1e-9)
        throw std::invalid_argument("survival_prob: retention outside [0,1]");
    if (std::abs(first + second - 2.0 * q) > 1e-8 * std::max(1.0, std::abs(2.0 * q)) ||
        std::abs(first * first + second * second - quad) > 1e-8 * std::max(1.0, quad))
        throw std::invalid_argument("survival_prob: retentions do not form an admissible pair");
}

// Survival P[X_{T/2} > floor, X_T > floor] for retention `first` on the first
// half and `second` on the second half, mean rate M and target delta.
SurvivalReport pair_survival_core(const ReinsuranceModel& model, double M, double delta,
                                  double first, double second, double floor, SurvivalAlgo algo,
                                  const SurvivalOptions& opts) {
    const double half = model.T / 2.0;
    const std::vector<GaussianIncrement> increments = {
        {drift_of(model, first) * half, vol_of(model, first) * std::sqrt(half)},
        {drift_of(model, second) * half, vol_of(model, second) * std::sqrt(half)},
    };
    const std::vector<double> levels = {floor, floor};

    if (algo == SurvivalAlgo::mc)
        return partial_sum_survival(increments, levels, SurvivalMethod::monte_carlo, opts);
    if (algo == SurvivalAlgo::direct)
        return partial_sum_survival(increments, levels, SurvivalMethod::quadrature, opts);

    // Decomposition route: write the first-half surplus as w*Y + Z with
    // Y ~ N(MT, delta^2 T) terminal and Z independent.
    const double w = model.lambda * model.mu2 * first * first /
                     (2.0 * delta * delta);
    if (w <= 1e-12 || w >= 1.0 - 1e-12) {
        SurvivalReport report =
            partial_sum_survival(increments, levels, SurvivalMethod::quadrature, opts);
        if (!report.note.empty())
            report.note += "; ";
        report.note += "degenerate decomposition weight, direct route used";
        return report;
    }
    const double ez = increments[0].mean - w * M * model.T;
    const double sd_z = std::sqrt(w * (1.0 - w)) * delta * std::sqrt(model.T);
    const double mean_y = M * model.T;
    const double sd_y = delta * std::sqrt(model.T);
    auto integrand = [&](double y) {
        const double tail = 1.0 - std_normal_cdf((floor - w * y - ez) / sd_z);
        return tail * std_normal_pdf((y - mean_y) / sd_y) / sd_y;
    };
    const QuadratureResult q = integrate_semi_infinite(integrand, floor, opts.quad_1d);
    SurvivalReport report;
    report.method = SurvivalMethod::quadrature;
    report.probability = clamp_probability(q.value, report.note, "decomposition survival");
    report.error_estimate = q.abs_error_estimate;
    report.evaluations = q.evaluations;
    return report;
}

void attach_diagnostics(SurvivalReport& report, const SurvivalDecomposition& decomposition) {
    report.rho = decomposition.rho;
    report.gamma = decomposition.gamma;
    report.ez0 = decomposition.ez0;
    report.ystar = decomposition.ystar;
}

} // namespace

ReinsuranceModel::ReinsuranceModel(double lambda_, double mu_, double mu2_, double eta_,
                                   double theta_, double T_)
    : lambda(lambda_), mu(mu_), mu2(mu2_), eta(eta_), theta(theta_), T(T_) {
    if (!(lambda > 0.0) || !(mu > 0.0) || !(mu2 > 0.0))
        throw std::invalid_argument("ReinsuranceModel: lambda, mu, mu2 must be > 0");
    if (!(eta > 0.0))
        throw std::invalid_argument("ReinsuranceModel: eta must be > 0");
    if (theta < eta)
        throw std::invalid_argument(
            "ReinsuranceModel: theta must be >= eta, reinsurance cannot be cheaper than direct business");
    if (!(T > 0.0))
        throw std::invalid_argument("ReinsuranceModel: T must be > 0");
}

double drift_of(const ReinsuranceModel& model, double b) {
    return model.lambda * model.mu * (model.theta * b - (model.theta - model.eta));
}

double vol_of(const ReinsuranceModel& model, double b) {
    return std::sqrt(model.lambda * model.mu2) * b;
}

FeasibilityRange feasibility_bounds(const ReinsuranceModel& model, double M, BoundMode mode) {
    FeasibilityRange range;
    if (M < 0.0) {
        range.reason = "target mean rate M is negative";
        return range;
    }
    const double mean_cap = model.lambda * model.mu * model.eta;
    if (M > mean_cap) {
        range.reason = "target mean rate M exceeds lambda*mu*eta";
        return range;
    }
    const double q = half_sum(model, M);
    const double lm2 = model.lambda * model.mu2;
    double lower = q * q;
    if (mode == BoundMode::full)
        lower = std::max(lower, M / (model.lambda * model.mu * model.theta));
    const double upper = std::min(2.0 * q * q, 1.0);
    if (lower > upper) {
        range.reason = "volatility bounds cross, no delta satisfies them";
        return range;
    }
    range.feasible = true;
    range.delta_min = std::sqrt(lm2 * lower);
    range.delta_max = std::sqrt(lm2 * upper);
    return range;
}

FeasibilityRange attainable_delta_range(const ReinsuranceModel& model, double M) {
    FeasibilityRange range;
    if (M < 0.0) {
        range.reason = "target mean rate M is negative";
        return range;
    }
    if (M > model.lambda * model.mu * model.eta) {
        range.reason = "target mean rate M exceeds lambda*mu*eta";
        return range;
    }
    const double q = half_sum(model, M);
    const double spread = std::min(q, 1.0 - q);
    const double lm2 = model.lambda * model.mu2;
    range.feasible = true;
    range.delta_min = std::sqrt(lm2 * q * q);
    range.delta_max = std::sqrt(lm2 * (q * q + spread * spread));
    return range;
}

ReinsurancePair solve_pair(const ReinsuranceModel& model, const TargetDist& target) {
    const double q = half_sum(model, target.M);
    const double quad = 2.0 * target.delta * target.delta / (model.lambda * model.mu2);
    double disc = 0.5 * quad - q * q;
    if (disc < -1e-12 * std::max(1.0, quad))
        throw InfeasibleError("solve_pair: variance target below the pair minimum (negative discriminant)");
    disc = std::max(disc, 0.0);
    const double spread = std::sqrt(disc);
    double b0 = q - spread;
    double b1 = q + spread;
    const double tol = 1e-9;
    if (b0 < -tol)
        throw InfeasibleError("solve_pair: lower retention falls below 0");
    if (b1 > 1.0 + tol)
        throw InfeasibleError("solve_pair: upper retention exceeds 1");
    return ReinsurancePair{std::clamp(b0, 0.0, 1.0), std::clamp(b1, 0.0, 1.0)};
}

SurvivalDecomposition survival_decomposition(const ReinsuranceModel& model,
                                             const TargetDist& target,
                                             const ReinsurancePair& pair) {
    const double d2 = target.delta * target.delta;
    const double rho = model.lambda * model.mu2 * pair.b0 * pair.b0 / (2.0 * d2);
    const double gamma = model.lambda * model.mu2 * pair.b1 * pair.b1 / (2.0 * d2);
    if (std::abs(rho + gamma - 1.0) > 1e-8)
        throw std::invalid_argument("survival_decomposition: pair does not match the variance target");
    SurvivalDecomposition decomposition;
    decomposition.rho = rho;
    decomposition.gamma = gamma;
    decomposition.ez0 = drift_of(model, pair.b0) * model.T / 2.0 - rho * target.M * model.T;
    decomposition.varz0 = rho * gamma * d2 * model.T;
    if (decomposition.ez0 > 0.0 && rho < 0.5)
        decomposition.ystar = 2.0 * decomposition.ez0 / (1.0 - 2.0 * rho);
    return decomposition;
}

SurvivalReport survival_prob(const ReinsuranceModel& model, const TargetDist& target, double first,
                             double second, SurvivalAlgo algo, const SurvivalOptions& opts) {
    validate_pair_order(model, target, first, second);
    SurvivalReport report =
        pair_survival_core(model, target.M, target.delta, first, second, 0.0, algo, opts);
    const ReinsurancePair sorted{std::min(first, second), std::max(first, second)};
    attach_diagnostics(report, survival_decomposition(model, target, sorted));
    return report;
}

bool cheapness_condition(const ReinsuranceModel& model, const TargetDist& target) {
    // The residual mean at retention b is proportional to the concave parabola
    // F(b) = -(mu2 M/delta^2) b^2 + mu theta b - mu (theta - eta), whose peak
    // sits at b* = mu theta delta^2 / (2 mu2 M). F <= 0 on [0,1] iff the peak
    // lies at or beyond b = 1 (second inequality) and F(1) <= 0 (first).
    const double d2 = target.delta * target.delta;
    return model.mu * model.eta / model.mu2 <= target.M / d2 &&
           model.mu * model.theta / model.mu2 >= 2.0 * target.M / d2;
}

PenalisationResult penalisation_compare(const ReinsuranceModel& model, double M_prime, double P,
                                        double delta, SurvivalAlgo algo,
                                        const SurvivalOptions& opts) {
    if (P < 0.0)
        throw std::invalid_argument("penalisation_compare: P must be >= 0");
    const double b_hat = delta / std::sqrt(model.lambda * model.mu2);
    if (b_hat > 1.0 + 1e-12)
        throw InfeasibleError("penalisation_compare: constant retention implied by delta exceeds 1");
    if (std::abs(drift_of(model, b_hat) - M_prime) > 1e-8 * std::max(1.0, std::abs(M_prime)))
        throw std::invalid_argument(
            "penalisation_compare: M_prime is not the mean rate of the constant retention implied by delta");

    PenalisationResult result;
    result.b_hat = b_hat;
    result.M_prime = M_prime;

    const double M = M_prime - P;
    const TargetDist switched(M, delta, model.T);
    result.pair = solve_pair(model, switched);
    const SurvivalDecomposition decomposition = survival_decomposition(model, switched, result.pair);

    const TargetDist constant_target(M_prime, delta, model.T);
    result.constant =
        survival_prob(model, constant_target, b_hat, b_hat, algo, opts);

    const double floor = P * model.T;
    result.descending =
        pair_survival_core(model, M, delta, result.pair.b1, result.pair.b0, floor, algo, opts);
    attach_diagnostics(result.descending, decomposition);
    result.ascending =
        pair_survival_core(model, M, delta, result.pair.b0, result.pair.b1, floor, algo, opts);
    attach_diagnostics(result.ascending, decomposition);
    return result;
}

double max_feasible_penalty(const ReinsuranceModel& model, double delta) {
    const double b_hat = delta / std::sqrt(model.lambda * model.mu2);
    if (b_hat > 1.0 + 1e-12)
        throw InfeasibleError("max_feasible_penalty: constant retention implied by delta exceeds 1");
    const double M_prime = drift_of(model, b_hat);
    const double ratio = b_hat * b_hat; // delta^2/(lambda mu2)
    auto attainable = [&](double M) {
        const double q = half_sum(model, M);
        const double spread = std::min(q, 1.0 - q);
        return q * q + spread * spread >= ratio - 1e-15;
    };
    if (M_prime <= 0.0 || attainable(0.0))
        return std::max(M_prime, 0.0);
    double lo = 0.0, hi = M_prime; // attainable(hi) holds: pair degenerates to (b_hat, b_hat)
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (attainable(mid) ? hi : lo) = mid;
    }
    return M_prime - hi;
}

std::vector<ReinsuranceTriple> three_period_circle(const ReinsuranceModel& model,
                                                   const TargetDist& target, int samples) {
    if (samples < 1)
        throw std::invalid_argument("three_period_circle: samples must be >= 1");
    const double plane_sum = 3.0 * half_sum(model, target.M);
    const double sphere = 3.0 * target.delta * target.delta / (model.lambda * model.mu2);
    const double radius2 = sphere - plane_sum * plane_sum / 3.0;
    if (radius2 < -1e-12 * std::max(1.0, sphere))
        throw InfeasibleError("three_period_circle: variance target below the triple minimum");
    const double radius = std::sqrt(std::max(radius2, 0.0));
    const double center = plane_sum / 3.0;

    // Orthonormal basis of the plane sum b = const.
    const double ux = 1.0 / std::numbers::sqrt2, uy = -ux, uz = 0.0;
    const double vs = 1.0 / std::sqrt(6.0);
    const double vx = vs, vy = vs, vz = -2.0 * vs;

    std::vector<ReinsuranceTriple> kept;
    kept.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double phi = 2.0 * std::numbers::pi * i / samples;
        const double c = std::cos(phi), s = std::sin(phi);
        double b[3] = {
            center + radius * (c * ux + s * vx),
            center + radius * (c * uy + s * vy),
            center + radius * (c * uz + s * vz),
        };
        bool inside = true;
        for (double& v : b) {
            if (v < -1e-12 || v > 1.0 + 1e-12) {
                inside = false;
                break;
            }
            v = std::clamp(v, 0.0, 1.0);
        }
        if (inside)
            kept.push_back(ReinsuranceTriple{b[0], b[1], b[2]});
    }
    return kept;
}

SurvivalReport three_period_survival(const ReinsuranceModel& model, const TargetDist& target,
                                     const ReinsuranceTriple& triple, SurvivalAlgo algo,
                                     const SurvivalOptions& opts) {
    const double b[3] = {triple.b0, triple.b1, triple.b2};
    const double plane_sum = 3.0 * half_sum(model, target.M);
    const double sphere = 3.0 * target.delta * target.delta / (model.lambda * model.mu2);
    double sum = 0.0, sum2 = 0.0;
    for (double v : b) {
        if (v < -1e-9 || v > 1.0 + 1e-9)
            throw std::invalid_argument("three_period_survival: retention outside [0,1]");
        sum += v;
        sum2 += v * v;
    }
    if (std::abs(sum - plane_sum) > 1e-8 * std::max(1.0, std::abs(plane_sum)) ||
        std::abs(sum2 - sphere) > 1e-8 * std::max(1.0, sphere))
        throw std::invalid_argument("three_period_survival: triple is not admissible for the target");

    const double third = model.T / 3.0;
    std::vector<GaussianIncrement> increments;
    increments.reserve(3);
    for (double v : b)
        increments.push_back({drift_of(model, v) * third, vol_of(model, v) * std::sqrt(third)});
    const std::vector<double> levels = {0.0, 0.0, 0.0};

    if (algo == SurvivalAlgo::mc)
        return partial_sum_survival(increments, levels, SurvivalMethod::monte_carlo, opts);
    try {
        return partial_sum_survival(increments, levels, SurvivalMethod::quadrature, opts);
    } catch (const QuadratureBudgetError&) {
        SurvivalReport report =
            partial_sum_survival(increments, levels, SurvivalMethod::monte_carlo, opts);
        report.quadrature_fallback = true;
        if (!report.note.empty())
            report.note += "; ";
        report.note += "quadrature budget exhausted, Monte Carlo fallback";
        return report;
    }
}

CurveFit solve_strategy_curve(double g1, double g2, double T) {
    if (!(T > 0.0))
        throw std::invalid_argument("solve_strategy_curve: T must be > 0");
    if (!(g1 > 0.0) || !(g2 > 0.0) || !(g2 < T))
        throw InfeasibleError("solve_strategy_curve: needs g1 > 0 and 0 < g2 < T");

    // The second equation depends on (A, C) only through u = A/C:
    // u*T/(u+T) = g2, so u is closed-form and the first equation then fixes A.
    const double u = g2 * T / (T - g2);
    double A = g1 / (u * std::log1p(T / u));
    double C = A / u;

    auto residuals = [&](double a, double c, double& f1, double& f2) {
        const double ratio = 1.0 + c * T / a;
        f1 = (a * a / c) * std::log(ratio) - g1;
        f2 = a * T / (a + c * T) - g2;
    };

    double f1, f2;
    residuals(A, C, f1, f2);
    int iterations = 0;
    for (; iterations < 50 && std::max(std::abs(f1), std::abs(f2)) > 1e-13; ++iterations) {
        const double ratio = 1.0 + C * T / A;
        const double log_ratio = std::log(ratio);
        const double j11 = (2.0 * A / C) * log_ratio - T / ratio;
        const double j12 = -(A * A / (C * C)) * log_ratio + (A * T / C) / ratio;
        const double denom = (A + C * T) * (A + C * T);
        const double j21 = C * T * T / denom;
        const double j22 = -A * T * T / denom;
        const double det = j11 * j22 - j12 * j21;
        if (det == 0.0)
            break;
        // Solve J * d = -F.
        const double dA = (-f1 * j22 + f2 * j12) / det;
        const double dC = (-f2 * j11 + f1 * j21) / det;
        double scale = 1.0;
        const double old_norm = std::max(std::abs(f1), std::abs(f2));
        for (int damp = 0; damp < 40; ++damp, scale *= 0.5) {
            const double a_new = A + scale * dA;
            const double c_new = C + scale * dC;
            if (a_new <= 0.0 || c_new <= 0.0)
                continue;
            double t1, t2;
            residuals(a_new, c_new, t1, t2);
            if (std::max(std::abs(t1), std::abs(t2)) < old_norm) {
                A = a_new;
                C = c_new;
                f1 = t1;
                f2 = t2;
                break;
            }
        }
    }
    residuals(A, C, f1, f2);
    if (std::max(std::abs(f1), std::abs(f2)) > 1e-10)
        throw std::runtime_error("solve_strategy_curve: Newton polish did not reach 1e-10 residuals");
    return CurveFit{A, C, f1, f2, iterations};
}

std::pair<double, double> curve_targets(const ReinsuranceModel& model, double M, double delta) {
    const double g1 = (M + model.lambda * model.mu * (model.theta - model.eta) * model.T) /
                      (model.lambda * model.theta * model.mu);
    const double g2 = delta * delta / (model.lambda * model.mu2);
    return {g1, g2};
}

std::pair<double, double> curve_targets_integral(const ReinsuranceModel& model, double M,
                                                 double delta) {
    const double g1 = (M + model.lambda * model.mu * (model.theta - model.eta)) * model.T /
                      (model.lambda * model.mu * model.theta);
    const double g2 = delta * delta * model.T / (model.lambda * model.mu2);
    return {g1, g2};
}

CurveFit fit_curve_to_integrals(double int_b, double int_b2, double T) {
    if (!(T > 0.0))
        throw std::invalid_argument("fit_curve_to_integrals: T must be > 0");
    if (!(int_b > 0.0) || !(int_b2 > 0.0) || !(int_b2 < T))
        throw InfeasibleError("fit_curve_to_integrals: needs int_b > 0 and 0 < int_b2 < T");
    const double u = int_b2 * T / (T - int_b2);
    const double mean_residual = u * std::log1p(T / u) - int_b;
    return CurveFit{u, 1.0, mean_residual, 0.0, 0};
}

double strategy_curve_value(const CurveFit& fit, double t) {
    return fit.A / (fit.A + fit.C * t);
}

} // namespace tci
