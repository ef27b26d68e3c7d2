#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tci/normal.hpp"
#include "tci/ruin_mc.hpp"
#include "tci/survival_report.hpp"

namespace tci {

/// Diffusion approximation of a surplus under proportional reinsurance with
/// retention level b in [0,1]:
///   dX = lambda*mu*(theta*b - (theta - eta)) dt + sqrt(lambda*mu2)*b dW.
struct ReinsuranceModel {
    double lambda; ///< claim arrival intensity, > 0
    double mu;     ///< mean claim size, > 0
    double mu2;    ///< second moment of the claim size, > 0
    double eta;    ///< insurer safety loading, > 0
    double theta;  ///< reinsurer safety loading, >= eta
    double T;      ///< horizon, > 0

    ReinsuranceModel(double lambda, double mu, double mu2, double eta, double theta, double T);
};

/// Drift of the retained surplus at retention b.
double drift_of(const ReinsuranceModel& model, double b);

/// Volatility of the retained surplus at retention b.
double vol_of(const ReinsuranceModel& model, double b);

/// Which terms of the volatility lower bound to enforce; `quadratic_only`
/// reproduces the worked feasibility ranges, `full` adds the linear term.
enum class BoundMode { full, quadratic_only };

struct FeasibilityRange {
    bool feasible = false;
    double delta_min = 0.0;
    double delta_max = 0.0;
    std::string reason; ///< empty when feasible
};

/// Necessary bounds for a two-period retention pair reaching N(M*T, delta^2*T):
/// 0 <= M <= lambda*mu*eta and
///   delta^2/(lambda*mu2) in [max(q^2 [, M/(lambda*mu*theta)]), min(2q^2, 1)]
/// with q = (M + lambda*mu*(theta-eta))/(lambda*mu*theta).
FeasibilityRange feasibility_bounds(const ReinsuranceModel& model, double M,
                                    BoundMode mode = BoundMode::full);

/// Sharp delta range for which solve_pair returns retentions inside [0,1]:
/// delta^2/(lambda*mu2) in [q^2, q^2 + min(q, 1-q)^2]. Narrower than the
/// necessary range above whenever q != 1/2.
FeasibilityRange attainable_delta_range(const ReinsuranceModel& model, double M);

/// Half-horizon retention pair, sorted b0 <= b1.
struct ReinsurancePair {
    double b0;
    double b1;
};

/// Solves b0+b1 = 2(M + lambda mu (theta-eta))/(lambda mu theta) and
/// b0^2+b1^2 = 2 delta^2/(lambda mu2). Throws InfeasibleError when the
/// discriminant is negative (variance target) or a root leaves [0,1]
/// (retention bounds).
ReinsurancePair solve_pair(const ReinsuranceModel& model, const TargetDist& target);

/// Split of the terminal value Y ~ N(MT, delta^2 T) against the first-half
/// surplus: U_1 = rho*Y + Z0 with Z0 independent of Y.
struct SurvivalDecomposition {
    double rho;   ///< lambda mu2 b0^2 / (2 delta^2)
    double gamma; ///< lambda mu2 b1^2 / (2 delta^2) = 1 - rho
    double ez0;   ///< drift_of(b0)*T/2 - rho*M*T
    double varz0; ///< rho*gamma*delta^2*T
    std::optional<double> ystar; ///< integrand crossing 2*ez0/(1-2*rho); present iff ez0 > 0 and rho < 1/2
};

SurvivalDecomposition survival_decomposition(const ReinsuranceModel& model,
                                             const TargetDist& target,
                                             const ReinsurancePair& pair);

enum class SurvivalAlgo {
    direct,        ///< integrate over the two half-horizon Gaussian increments
    decomposition, ///< integrate against the terminal density via the (Y, Z) split
    mc,            ///< Monte Carlo over exact endpoint samples
};

/// P[surplus > 0 at T/2 and at T] when retention `first` runs on [0, T/2] and
/// `second` on (T/2, T]. The two levels must form an admissible pair for the
/// target (either order). Diagnostics (rho, gamma, ez0, ystar) are filled
/// from the sorted pair.
SurvivalReport survival_prob(const ReinsuranceModel& model, const TargetDist& target, double first,
                             double second, SurvivalAlgo algo, const SurvivalOptions& opts = {});

/// True iff reinsurance is cheap enough that the first-half residual mean
/// E[Z0] is nonpositive for every retention in [0,1]:
/// mu*eta/mu2 <= M/delta^2 and mu*theta/mu2 >= 2M/delta^2 (the second
/// inequality places the peak of the residual-mean parabola at or beyond
/// full retention). Both comparisons are non-strict.
bool cheapness_condition(const ReinsuranceModel& model, const TargetDist& target);

/// Comparison of sticking with the constant variance-matching retention
/// b_hat = delta/sqrt(lambda*mu2) (mean rate M_prime, no penalty) against
/// switching strategies that pay a deterministic penalty P*T at T/2 and
/// target the reduced mean M_prime - P with the same delta.
struct PenalisationResult {
    double b_hat;
    double M_prime;
    ReinsurancePair pair;      ///< switching pair for (M_prime - P, delta)
    SurvivalReport constant;   ///< constant b_hat, no penalty
    SurvivalReport descending; ///< b1 first, then b0, penalty applied
    SurvivalReport ascending;  ///< b0 first, then b1, penalty applied
};

PenalisationResult penalisation_compare(const ReinsuranceModel& model, double M_prime, double P,
                                        double delta, SurvivalAlgo algo = SurvivalAlgo::direct,
                                        const SurvivalOptions& opts = {});

/// Largest penalty rate P for which the switching pair is still solvable
/// with the given delta (bisection on the attainable range).
double max_feasible_penalty(const ReinsuranceModel& model, double delta);

struct ReinsuranceTriple {
    double b0;
    double b1;
    double b2;
};

/// Admissible third-horizon retention triples: intersection of the plane
/// sum b = 3(M + lambda mu (theta-eta))/(lambda mu theta) with the sphere
/// sum b^2 = 3 delta^2/(lambda mu2), sampled at `samples` equispaced angles
/// and filtered to the unit cube.
std::vector<ReinsuranceTriple> three_period_circle(const ReinsuranceModel& model,
                                                   const TargetDist& target, int samples);

/// P[surplus > 0 at T/3, 2T/3, T] under the given triple. Quadrature uses the
/// nested two-dimensional integral; on budget exhaustion it falls back to MC
/// and flags the report.
SurvivalReport three_period_survival(const ReinsuranceModel& model, const TargetDist& target,
                                     const ReinsuranceTriple& triple,
                                     SurvivalAlgo algo = SurvivalAlgo::direct,
                                     const SurvivalOptions& opts = {});

/// Hyperbolic retention profile b(t) = A/(A + C*t), one-parameter in shape:
/// b depends on (A, C) only through A/C.
struct CurveFit {
    double A;
    double C;
    double residual1; ///< first calibration equation at the returned point
    double residual2; ///< second calibration equation at the returned point
    int iterations;   ///< Newton steps taken
};

/// Solves the calibration system
///   (A^2/C) * ln((A + C*T)/A) = g1
///   (A/C) * (1 - A/(A+C*T))   = g2
/// by a closed-form reduction (u = A/C falls out of the second equation)
/// used to seed a damped Newton polish; residuals <= 1e-10. Requires
/// g1 > 0 and 0 < g2 < T.
CurveFit solve_strategy_curve(double g1, double g2, double T);

/// Right-hand sides for solve_strategy_curve derived from model parameters
/// in the convention used by the reference dataset:
/// g1 = (M + lambda mu (theta-eta) T)/(lambda theta mu), g2 = delta^2/(lambda mu2).
std::pair<double, double> curve_targets(const ReinsuranceModel& model, double M, double delta);

/// Dimensionally consistent alternative: the integrals of b and b^2 over
/// [0,T] required to reach N(M*T, delta^2*T):
/// g1 = (M + lambda mu (theta-eta)) T/(lambda mu theta), g2 = delta^2 T/(lambda mu2).
std::pair<double, double> curve_targets_integral(const ReinsuranceModel& model, double M,
                                                 double delta);

/// Calibrates the one-parameter family to integral targets
/// int b dt = int_b, int b^2 dt = int_b2. Both are generally not attainable
/// at once: the shape parameter is chosen to match int_b2 exactly and
/// residual1 reports the int_b mismatch. Returns the canonical scaling A = u,
/// C = 1.
CurveFit fit_curve_to_integrals(double int_b, double int_b2, double T);

/// b(t) = A/(A + C*t).
double strategy_curve_value(const CurveFit& fit, double t);

} // namespace tci
