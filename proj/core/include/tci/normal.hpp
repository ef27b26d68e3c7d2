#pragma once

namespace tci {

/// Standard normal density.
double std_normal_pdf(double z);

/// Standard normal distribution function. Evaluated through the C library's
/// erfc, whose rational approximations keep the absolute error well below
/// the 1e-12 this library relies on. Monotone, Phi(-z) = 1 - Phi(z) to
/// machine precision.
double std_normal_cdf(double z);

/// log(Phi(z)), finite far into the left tail where Phi underflows.
double std_normal_log_cdf(double z);

/// Inverse of std_normal_cdf on (0,1). Bisection bracket followed by Newton
/// polish; |Phi(quantile(p)) - p| <= 1e-10 over [1e-12, 1-1e-12].
/// Throws std::domain_error for p outside (0,1).
double std_normal_quantile(double p);

/// Terminal Gaussian target for the instantaneous surplus: X_T ~ N(M*T, delta^2*T).
struct TargetDist {
    double M;     ///< drift rate of the target mean, mean at horizon is M*T
    double delta; ///< volatility rate, variance at horizon is delta^2*T
    double T;     ///< horizon, > 0

    TargetDist(double M_, double delta_, double T_);
};

struct RiskMeasures {
    double var;   ///< value-at-risk of the loss L_T = -X_T at level alpha
    double es;    ///< expected shortfall at the same level
    double alpha;
};

/// Closed-form VaR/ES of the Gaussian loss L_T = -X_T:
///   VaR = -M*T + delta*sqrt(T)*q(alpha),  ES = -M*T + delta*sqrt(T)*pdf(q(alpha))/(1-alpha).
/// Requires alpha in (0,1); es >= var for alpha >= 1/2.
RiskMeasures var_es(const TargetDist& target, double alpha);

} // namespace tci
