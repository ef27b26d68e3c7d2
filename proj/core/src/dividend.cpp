#include "tci/dividend.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tci/errors.hpp"

namespace tci {

namespace {

void require_admissible(const DividendProblem& problem) {
    const AdmissibilityVerdict verdict = check_target(problem);
    if (verdict.ok)
        return;
    std::string what = "dividend target not admissible:";
    for (const std::string& v : verdict.violations)
        what += " " + v + ";";
    throw InfeasibleError(what);
}

// Discount weight of period k: integral of e^{-rs} over the period, times r^-1 scaling.
std::vector<double> discount_weights(const DividendProblem& problem) {
    const double step = problem.T / problem.n;
    const double per_period = (1.0 - std::exp(-problem.r * step)) / problem.r;
    std::vector<double> weights(static_cast<std::size_t>(problem.n));
    for (int k = 0; k < problem.n; ++k)
        weights[static_cast<std::size_t>(k)] = per_period * std::exp(-problem.r * k * step);
    return weights;
}

} // namespace

DividendProblem::DividendProblem(double mubar_, double sigmabar_, double xi_, double x_, double T_,
                                 int n_, double r_, const TargetDist& target_)
    : mubar(mubar_), sigmabar(sigmabar_), xi(xi_), x(x_), T(T_), n(n_), r(r_), target(target_) {
    if (!(mubar > 0.0))
        throw std::invalid_argument("DividendProblem: mubar must be > 0");
    if (!(sigmabar > 0.0))
        throw std::invalid_argument("DividendProblem: sigmabar must be > 0");
    if (!(xi > 0.0))
        throw std::invalid_argument("DividendProblem: xi must be > 0");
    if (!(T > 0.0))
        throw std::invalid_argument("DividendProblem: T must be > 0");
    if (n < 1)
        throw std::invalid_argument("DividendProblem: n must be >= 1");
    if (!(r > 0.0))
        throw std::invalid_argument("DividendProblem: r must be > 0");
    if (std::abs(target.T - T) > 1e-12 * std::max(1.0, T))
        throw std::invalid_argument("DividendProblem: target horizon differs from T");
}

AdmissibilityVerdict check_target(const DividendProblem& problem) {
    AdmissibilityVerdict verdict;
    const double M = problem.target.M;
    // absolute slack so targets computed as mubar - xi in doubles stay admissible
    const double tol = 1e-12 * std::max({1.0, problem.mubar, problem.xi});
    if (M > problem.mubar + tol)
        verdict.violations.push_back("target mean rate M exceeds the premium rate mubar");
    if (M < problem.mubar - problem.xi - tol)
        verdict.violations.push_back("target mean rate M below mubar - xi, payout cap too small");
    if (std::abs(problem.target.delta - problem.sigmabar) > 1e-12)
        verdict.violations.push_back(
            "variance unreachable: deterministic payouts cannot move delta away from sigmabar");
    verdict.ok = verdict.violations.empty();
    return verdict;
}

int full_rate_periods(const DividendProblem& problem) {
    require_admissible(problem);
    const double mass = problem.n * (problem.mubar - problem.target.M); // total payout, in rate units
    for (int m = 0; m + 1 < problem.n; ++m) {
        if (mass < (m + 1) * problem.xi)
            return m;
    }
    return problem.n - 1;
}

DividendStrategy max_dividend_strategy(const DividendProblem& problem) {
    const int kappa = full_rate_periods(problem);
    const double mass = problem.n * (problem.mubar - problem.target.M);
    DividendStrategy strategy;
    strategy.rates.assign(static_cast<std::size_t>(problem.n), 0.0);
    for (int k = 0; k < kappa; ++k)
        strategy.rates[static_cast<std::size_t>(k)] = problem.xi;
    strategy.rates[static_cast<std::size_t>(kappa)] =
        std::clamp(mass - kappa * problem.xi, 0.0, problem.xi);
    return strategy;
}

DividendStrategy min_ruin_strategy(const DividendProblem& problem) {
    DividendStrategy strategy = max_dividend_strategy(problem);
    std::reverse(strategy.rates.begin(), strategy.rates.end());
    return strategy;
}

double discounted_value(const DividendStrategy& strategy, const DividendProblem& problem) {
    if (strategy.rates.size() != static_cast<std::size_t>(problem.n))
        throw std::invalid_argument("discounted_value: strategy has wrong period count");
    for (double c : strategy.rates)
        if (c < -1e-12 || c > problem.xi + 1e-9)
            throw std::invalid_argument("discounted_value: rate outside [0, xi]");
    const std::vector<double> weights = discount_weights(problem);
    double total = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k)
        total += strategy.rates[k] * weights[k];
    return total;
}

double continuous_switch_time(const DividendProblem& problem) {
    require_admissible(problem);
    return std::clamp((problem.mubar - problem.target.M) * problem.T / problem.xi, 0.0, problem.T);
}

BruteForceResult brute_force_best(const DividendProblem& problem, int grid_steps) {
    require_admissible(problem);
    if (grid_steps < 1)
        throw std::invalid_argument("brute_force_best: grid_steps must be >= 1");
    const int free_dims = problem.n - 1;
    double combos = 1.0;
    for (int d = 0; d < free_dims; ++d)
        combos *= grid_steps + 1.0;
    if (combos > 1e8)
        throw std::invalid_argument("brute_force_best: grid too large, (grid+1)^(n-1) > 1e8");

    const double mass = problem.n * (problem.mubar - problem.target.M);
    const std::vector<double> weights = discount_weights(problem);
    const double step = problem.xi / grid_steps;
    const double slack = 1e-9 * std::max(1.0, problem.xi);

    BruteForceResult best;
    best.value = -1.0;
    std::vector<double> rates(static_cast<std::size_t>(problem.n), 0.0);

    // Enumerate rates[1..n-1] on the grid; rates[0] is implied by the mean
    // constraint and must land in [0, xi].
    auto consider = [&]() {
        const double implied = mass - std::accumulate(rates.begin() + 1, rates.end(), 0.0);
        if (implied < -slack || implied > problem.xi + slack)
            return;
        rates[0] = std::clamp(implied, 0.0, problem.xi);
        ++best.evaluated;
        double value = 0.0;
        for (std::size_t k = 0; k < weights.size(); ++k)
            value += rates[k] * weights[k];
        if (value > best.value ||
            (value == best.value &&
             std::lexicographical_compare(rates.begin(), rates.end(),
                                          best.strategy.rates.begin(), best.strategy.rates.end()))) {
            best.value = value;
            best.strategy.rates = rates;
        }
    };

    std::vector<int> idx(static_cast<std::size_t>(std::max(free_dims, 1)), 0);
    if (free_dims == 0) {
        consider();
    } else {
        for (;;) {
            for (int d = 0; d < free_dims; ++d)
                rates[static_cast<std::size_t>(d + 1)] = idx[static_cast<std::size_t>(d)] * step;
            consider();
            int d = free_dims - 1;
            while (d >= 0 && ++idx[static_cast<std::size_t>(d)] > grid_steps) {
                idx[static_cast<std::size_t>(d)] = 0;
                --d;
            }
            if (d < 0)
                break;
        }
    }
    if (best.value < 0.0)
        throw InfeasibleError("brute_force_best: no feasible grid point");
    return best;
}

} // namespace tci
