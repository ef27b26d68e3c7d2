#include "tci/quadrature.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace tci {

namespace {

// Kronrod-15 abscissae/weights with the embedded Gauss-7 weights (QUADPACK).
constexpr double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr double wgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278,
};
constexpr double wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694,
};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

struct EvalBudget {
    long used = 0;
    long limit = 0;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    double resabs = wgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            resg += wg[j / 2] * (f1 + f2);
    }
    const double value = resk * half;
    // |K15-G7| overestimates the K15 error for smooth panels; the roundoff
    // floor keeps the estimate honest once panels shrink to noise level.
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * resabs * half;
    const double error = std::max(std::abs(resk - resg) * half, std::abs(roundoff));
    return Panel{a, b, value, error};
}

// Globally adaptive refinement. `cost_per_panel` is 15 when f is the actual
// integrand and 0 when f itself runs a budget-counted inner quadrature.
QuadratureResult adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol, EvalBudget& budget,
                          long cost_per_panel) {
    auto charge = [&](const QuadratureResult& best) {
        if (budget.used + cost_per_panel > budget.limit)
            throw QuadratureBudgetError("quadrature evaluation budget exceeded", best);
        budget.used += cost_per_panel;
    };

    std::priority_queue<Panel> panels;
    charge(QuadratureResult{0.0, std::numeric_limits<double>::infinity(), budget.used});
    panels.push(evaluate_panel(f, a, b));
    double total_value = panels.top().value;
    double total_error = panels.top().error;

    const double min_width = 16.0 * std::numeric_limits<double>::epsilon() *
                             std::max({1.0, std::abs(a), std::abs(b)});
    while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
        const Panel worst = panels.top();
        const QuadratureResult sofar{total_value, total_error, budget.used};
        if (worst.b - worst.a < min_width)
            throw QuadratureBudgetError("quadrature refinement stalled at roundoff", sofar);
        charge(sofar);
        charge(sofar);
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = evaluate_panel(f, worst.a, mid);
        const Panel right = evaluate_panel(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    return QuadratureResult{total_value, total_error, budget.used};
}

void validate_options(const QuadratureOptions& opts) {
    if (!(opts.rel_tol > 0.0) && !(opts.abs_tol > 0.0))
        throw std::invalid_argument("quadrature: at least one tolerance must be > 0");
    if (opts.max_evaluations <= 0)
        throw std::invalid_argument("quadrature: max_evaluations must be > 0");
}

std::function<double(double)> to_unit_interval(const std::function<double(double)>& f,
                                               double lower) {
    // y = lower + t/(1-t) maps [0,1) onto [lower, inf); dy = dt/(1-t)^2.
    return [f, lower](double t) {
        const double one_minus = 1.0 - t;
        const double y = lower + t / one_minus;
        const double fv = f(y);
        if (fv == 0.0)
            return 0.0;
        return fv / (one_minus * one_minus);
    };
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts) {
    if (!(b >= a))
        throw std::invalid_argument("integrate_adaptive: requires b >= a");
    validate_options(opts);
    EvalBudget budget{0, opts.max_evaluations};
    return adaptive(f, a, b, opts.rel_tol, opts.abs_tol, budget, 15);
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double lower,
                                         const QuadratureOptions& opts) {
    validate_options(opts);
    EvalBudget budget{0, opts.max_evaluations};
    return adaptive(to_unit_interval(f, lower), 0.0, 1.0, opts.rel_tol, opts.abs_tol, budget, 15);
}

QuadratureResult integrate_nested(const std::function<double(double, double)>& f,
                                  double outer_lower,
                                  const std::function<double(double)>& inner_lower,
                                  const QuadratureOptions& opts) {
    validate_options(opts);
    EvalBudget budget{0, opts.max_evaluations};
    const double inner_rel = opts.rel_tol * 0.1;
    const double inner_abs = opts.abs_tol * 0.1;

    auto outer_integrand = [&](double u) {
        auto slice = [&, u](double v) { return f(u, v); };
        return adaptive(to_unit_interval(slice, inner_lower(u)), 0.0, 1.0, inner_rel, inner_abs,
                        budget, 15)
            .value;
    };
    QuadratureResult outer = adaptive(to_unit_interval(outer_integrand, outer_lower), 0.0, 1.0,
                                      opts.rel_tol, opts.abs_tol, budget, 0);
    outer.evaluations = budget.used;
    return outer;
}

} // namespace tci
