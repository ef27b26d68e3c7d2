#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace tci {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0; ///< integrand calls actually spent
};

struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    long max_evaluations = 100000;
};

/// Thrown when the evaluation budget runs out (or refinement stalls at
/// roundoff) before the tolerance is met. `best` holds the estimate
/// accumulated so far; its error field is honest about the shortfall.
class QuadratureBudgetError : public std::runtime_error {
public:
    QuadratureBudgetError(const std::string& what, QuadratureResult best_so_far)
        : std::runtime_error(what), best(best_so_far) {}
    QuadratureResult best;
};

/// Adaptive Gauss-Kronrod 7/15 on a finite interval. Panels with the largest
/// error estimate are bisected until sum(err) <= max(abs_tol, rel_tol*|value|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts = {});

/// Integral over [lower, inf), mapped onto [0,1) via y = lower + t/(1-t).
/// The integrand must decay fast enough for the transformed integrand to
/// vanish at t -> 1 (Gaussian/exponential tails qualify).
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double lower,
                                         const QuadratureOptions& opts = {});

/// Iterated 2-D integral
///   int_{outer_lower}^{inf} du  int_{inner_lower(u)}^{inf} dv  f(u, v)
/// with the inner tolerance tightened one order below the outer one and a
/// shared evaluation budget (counted in f calls).
QuadratureResult integrate_nested(const std::function<double(double, double)>& f,
                                  double outer_lower,
                                  const std::function<double(double)>& inner_lower,
                                  const QuadratureOptions& opts = {1e-7, 1e-10, 10000000});

} // namespace tci
