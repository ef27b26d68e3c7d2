#pragma once

#include <optional>
#include <string>

namespace tci {

enum class SurvivalMethod {
    quadrature,  ///< deterministic integration (includes closed-form shortcuts)
    monte_carlo,
};

/// Result of a survival-probability computation, tagged with how it was
/// obtained. error_estimate is an absolute quadrature bound or one binomial
/// standard error for Monte Carlo.
struct SurvivalReport {
    double probability = 0.0;
    SurvivalMethod method = SurvivalMethod::quadrature;
    double error_estimate = 0.0;
    long evaluations = 0; ///< integrand calls (quadrature) or paths (MC)

    // Mid-horizon decomposition diagnostics, filled by the reinsurance layer.
    std::optional<double> rho;
    std::optional<double> gamma;
    std::optional<double> ez0;
    std::optional<double> ystar;

    bool quadrature_fallback = false; ///< true when quadrature blew its budget and MC stood in
    std::string note;                 ///< degenerate shortcuts, clamping diagnostics
};

} // namespace tci
