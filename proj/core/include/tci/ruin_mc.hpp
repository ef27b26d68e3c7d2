#pragma once

#include <cstdint>
#include <vector>

#include "tci/quadrature.hpp"
#include "tci/survival_report.hpp"

namespace tci {

/// One leg of a piecewise Brownian surplus: dX = drift dt + vol dW for `duration`.
struct Segment {
    double duration; ///< > 0
    double drift;
    double vol; ///< >= 0; 0 means a deterministic drift leg
};

struct PiecewiseBM {
    double x0 = 0.0;
    std::vector<Segment> segments;
    std::uint64_t seed = 0;

    double total_duration() const;
    void validate() const; ///< throws std::invalid_argument on bad segments
};

struct MCEstimate {
    double p_hat = 0.0;
    double std_err = 0.0; ///< binomial, sqrt(p(1-p)/paths)
    long paths = 0;
    std::uint64_t seed = 0;
};

/// P[ inf_{0<=s<=t} (x + mu s + sigma W_s) >= 0 ] for a single diffusive leg.
/// Reflection identity, evaluated in log space so large |mu| x / sigma^2
/// cannot overflow. Returns 0 for x <= 0 (immediate oscillation below the
/// barrier) and requires sigma > 0, t > 0.
double segment_survival(double x, double mu, double sigma, double t);

/// Exact pathwise infimum of one simulated path: segment endpoints are drawn
/// from their exact Gaussian law and the within-segment minimum from the
/// Brownian-bridge law P[min <= m] = exp(-2(a-m)(b-m)/(vol^2 dt)), so
/// checking `infimum < 0` realises exactly the bridge crossing probability
/// exp(-2ab/(vol^2 dt)) for positive endpoints a, b. Draws are keyed by
/// (seed, path_index, slot), two slots per segment.
double path_infimum(const PiecewiseBM& process, std::uint64_t path_index);

/// P[ inf X < 0 on [0, T] ] by Monte Carlo over `paths` paths. With
/// `antithetic`, odd path indices reuse the previous stream with mirrored
/// draws (z -> -z, u -> 1-u).
MCEstimate ruin_prob_continuous(const PiecewiseBM& process, long paths, bool antithetic = false);

/// Independent Gaussian increment, sd >= 0 (0 = deterministic).
struct GaussianIncrement {
    double mean;
    double sd;
};

struct SurvivalOptions {
    QuadratureOptions quad_1d = {};                       ///< <= 2 stochastic increments
    QuadratureOptions quad_2d = {1e-7, 1e-10, 10000000};  ///< 3 stochastic increments
    long paths = 1000000;
    std::uint64_t seed = 1;
};

/// P[ sum_{i<=k} I_i > level_k for every k ] for independent Gaussian
/// increments. Deterministic increments are folded into the levels; the
/// quadrature route handles up to three stochastic increments (closed form,
/// one-dimensional, nested two-dimensional) and throws UnsupportedError
/// beyond that. The MC route samples increments exactly.
SurvivalReport partial_sum_survival(const std::vector<GaussianIncrement>& increments,
                                    const std::vector<double>& levels, SurvivalMethod method,
                                    const SurvivalOptions& opts = {});

/// P[ X_t > 0 at every check time ], check times on segment boundaries
/// (within 1e-9 relative) so increments between checks are independent
/// Gaussians. Strictly weaker than continuous non-ruin.
SurvivalReport survive_discrete(const PiecewiseBM& process, const std::vector<double>& check_times,
                                SurvivalMethod method, const SurvivalOptions& opts = {});

} // namespace tci
