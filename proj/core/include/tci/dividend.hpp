#pragma once

#include <string>
#include <vector>

#include "tci/normal.hpp"

namespace tci {

/// Surplus with capped dividend payouts on n equal periods:
/// X_t = x + mubar*t - (paid out so far) + sigmabar*W_t, rate cap xi per period.
struct DividendProblem {
    double mubar;    ///< premium income rate, > 0
    double sigmabar; ///< surplus volatility, > 0
    double xi;       ///< maximal dividend rate per period, > 0
    double x;        ///< initial surplus
    double T;        ///< horizon, > 0
    int n;           ///< number of equal payout periods, >= 1
    double r;        ///< discount rate for the dividend value, > 0
    TargetDist target;

    DividendProblem(double mubar, double sigmabar, double xi, double x, double T, int n, double r,
                    const TargetDist& target);
};

/// Per-period payout rates, one entry per period, each in [0, xi].
struct DividendStrategy {
    std::vector<double> rates;
};

struct AdmissibilityVerdict {
    bool ok = false;
    std::vector<std::string> violations;
};

/// A terminal target N(x + M*T, delta^2*T) is reachable iff
/// mubar - xi <= M <= mubar and delta equals sigmabar (the payout rates are
/// deterministic, so the variance cannot be changed). Both comparisons carry
/// a 1e-12-scale slack so boundary targets assembled in doubles pass.
AdmissibilityVerdict check_target(const DividendProblem& problem);

/// Number of leading periods paid at the full rate xi by the value-optimal
/// plan: the smallest m >= 0 with n*(mubar - M) < (m+1)*xi, clamped to n-1
/// (the clamp binds only at M = mubar - xi, where the plan pays xi always).
int full_rate_periods(const DividendProblem& problem);

/// Value-optimal plan: pay xi for full_rate_periods periods, the remainder
/// n*(mubar - M) - kappa*xi once, then nothing.
DividendStrategy max_dividend_strategy(const DividendProblem& problem);

/// Survival-optimal plan: the reverse of max_dividend_strategy (push payouts
/// as late as possible).
DividendStrategy min_ruin_strategy(const DividendProblem& problem);

/// Expected discounted dividends sum_k (c_k/r) e^{-r k T/n} (1 - e^{-r T/n}).
double discounted_value(const DividendStrategy& strategy, const DividendProblem& problem);

/// Continuous-time switch point (mubar - M)*T/xi of the bang-bang payout,
/// clamped to [0, T]; full_rate_periods/n converges to it at rate 1/n.
double continuous_switch_time(const DividendProblem& problem);

struct BruteForceResult {
    DividendStrategy strategy;
    double value = 0.0;
    long evaluated = 0; ///< feasible grid points inspected
};

/// Exhaustive search over rate vectors on a uniform grid of [0, xi] per free
/// period (the first rate is implied by the mean constraint). Ties in value
/// resolve to the lexicographically smallest vector. Grid size is limited by
/// (grid_steps+1)^(n-1) <= 1e8.
BruteForceResult brute_force_best(const DividendProblem& problem, int grid_steps);

} // namespace tci
