#include "tci/ruin_mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tci/errors.hpp"
#include "tci/normal.hpp"
#include "tci/rng.hpp"

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

double simulated_infimum(const PiecewiseBM& process, std::uint64_t stream, bool mirror) {
    CounterRng rng(process.seed, stream);
    double w = process.x0;
    double worst = process.x0;
    std::uint64_t slot = 0;
    for (const Segment& seg : process.segments) {
        if (seg.vol == 0.0) {
            const double b = w + seg.drift * seg.duration;
            worst = std::min(worst, std::min(w, b));
            w = b;
            slot += 2;
            continue;
        }
        double z = rng.normal(slot);
        double u = rng.uniform(slot + 1);
        if (mirror) {
            z = -z;
            u = 1.0 - u;
        }
        slot += 2;
        const double b = w + seg.drift * seg.duration + seg.vol * std::sqrt(seg.duration) * z;
        const double diff = w - b;
        const double bridge_min =
            0.5 * (w + b - std::sqrt(diff * diff - 2.0 * seg.vol * seg.vol * seg.duration * std::log(u)));
        worst = std::min(worst, bridge_min);
        w = b;
    }
    return worst;
}

struct FoldedSystem {
    std::vector<GaussianIncrement> stochastic; // increments with sd > 0, in order
    std::vector<double> levels;                // effective level per stochastic prefix sum
    bool dead = false;                         // a deterministic check already failed
};

// Rewrites the conditions so they touch stochastic prefix sums only:
// deterministic increments shift the levels, consecutive checks that share
// the same stochastic prefix merge by taking the max level.
FoldedSystem fold(const std::vector<GaussianIncrement>& increments,
                  const std::vector<double>& levels) {
    FoldedSystem sys;
    double det_offset = 0.0;
    for (std::size_t i = 0; i < increments.size(); ++i) {
        if (increments[i].sd > 0.0) {
            sys.stochastic.push_back(increments[i]);
            sys.levels.push_back(levels[i] - det_offset);
        } else {
            det_offset += increments[i].mean;
            const double shifted = levels[i] - det_offset;
            if (sys.stochastic.empty()) {
                if (shifted >= 0.0)
                    sys.dead = true; // prefix sum is the constant det_offset
            } else {
                sys.levels.back() = std::max(sys.levels.back(), shifted);
            }
        }
    }
    return sys;
}

SurvivalReport quadrature_survival(const FoldedSystem& sys, const SurvivalOptions& opts) {
    SurvivalReport report;
    report.method = SurvivalMethod::quadrature;
    if (sys.dead) {
        report.note = "deterministic leg already breaches its level";
        return report;
    }
    const auto& inc = sys.stochastic;
    const auto& lv = sys.levels;
    switch (inc.size()) {
    case 0:
        report.probability = 1.0;
        report.note = "fully deterministic";
        return report;
    case 1: {
        report.probability = 1.0 - std_normal_cdf((lv[0] - inc[0].mean) / inc[0].sd);
        report.error_estimate = 1e-15;
        return report;
    }
    case 2: {
        const double m1 = inc[0].mean, s1 = inc[0].sd;
        const double m2 = inc[1].mean, s2 = inc[1].sd;
        auto integrand = [&](double u) {
            const double tail = 1.0 - std_normal_cdf((lv[1] - u - m2) / s2);
            return tail * std_normal_pdf((u - m1) / s1) / s1;
        };
        const QuadratureResult q = integrate_semi_infinite(integrand, lv[0], opts.quad_1d);
        report.probability = clamp_probability(q.value, report.note, "two-increment survival");
        report.error_estimate = q.abs_error_estimate;
        report.evaluations = q.evaluations;
        return report;
    }
    case 3: {
        const double m1 = inc[0].mean, s1 = inc[0].sd;
        const double m2 = inc[1].mean, s2 = inc[1].sd;
        const double m3 = inc[2].mean, s3 = inc[2].sd;
        const double l2 = lv[1], l3 = lv[2];
        auto integrand = [&](double u, double v) {
            const double tail = 1.0 - std_normal_cdf((l3 - u - v - m3) / s3);
            return tail * std_normal_pdf((u - m1) / s1) / s1 * std_normal_pdf((v - m2) / s2) / s2;
        };
        auto inner_lower = [l2](double u) { return l2 - u; };
        const QuadratureResult q = integrate_nested(integrand, lv[0], inner_lower, opts.quad_2d);
        report.probability = clamp_probability(q.value, report.note, "three-increment survival");
        report.error_estimate = q.abs_error_estimate;
        report.evaluations = q.evaluations;
        return report;
    }
    default:
        throw UnsupportedError(
            "partial_sum_survival: quadrature supports at most three stochastic increments");
    }
}

SurvivalReport mc_survival(const std::vector<GaussianIncrement>& increments,
                           const std::vector<double>& levels, const SurvivalOptions& opts) {
    if (opts.paths <= 0)
        throw std::invalid_argument("partial_sum_survival: paths must be positive");
    long alive = 0;
    for (long path = 0; path < opts.paths; ++path) {
        CounterRng rng(opts.seed, static_cast<std::uint64_t>(path));
        double sum = 0.0;
        std::uint64_t slot = 0;
        bool ok = true;
        for (std::size_t i = 0; i < increments.size(); ++i) {
            sum += increments[i].mean;
            if (increments[i].sd > 0.0)
                sum += increments[i].sd * rng.normal(slot++);
            if (!(sum > levels[i])) {
                ok = false;
                break;
            }
        }
        alive += ok ? 1 : 0;
    }
    SurvivalReport report;
    report.method = SurvivalMethod::monte_carlo;
    report.probability = static_cast<double>(alive) / static_cast<double>(opts.paths);
    report.error_estimate =
        std::sqrt(report.probability * (1.0 - report.probability) / static_cast<double>(opts.paths));
    report.evaluations = opts.paths;
    return report;
}

} // namespace

double PiecewiseBM::total_duration() const {
    double total = 0.0;
    for (const Segment& seg : segments)
        total += seg.duration;
    return total;
}

void PiecewiseBM::validate() const {
    if (segments.empty())
        throw std::invalid_argument("PiecewiseBM: needs at least one segment");
    for (const Segment& seg : segments) {
        if (!(seg.duration > 0.0))
            throw std::invalid_argument("PiecewiseBM: segment duration must be > 0");
        if (seg.vol < 0.0)
            throw std::invalid_argument("PiecewiseBM: segment vol must be >= 0");
        if (!std::isfinite(seg.drift))
            throw std::invalid_argument("PiecewiseBM: segment drift must be finite");
    }
}

double segment_survival(double x, double mu, double sigma, double t) {
    if (!(sigma > 0.0))
        throw std::domain_error("segment_survival: sigma must be > 0");
    if (!(t > 0.0))
        throw std::domain_error("segment_survival: t must be > 0");
    if (x <= 0.0)
        return 0.0;
    const double sd = sigma * std::sqrt(t);
    const double direct = std_normal_cdf((x + mu * t) / sd);
    // exp(-2 mu x / sigma^2) * Phi((-x + mu t)/sd), assembled in log space.
    const double log_reflected =
        -2.0 * mu * x / (sigma * sigma) + std_normal_log_cdf((-x + mu * t) / sd);
    const double reflected = log_reflected < -745.0 ? 0.0 : std::exp(log_reflected);
    return std::clamp(direct - reflected, 0.0, 1.0);
}

double path_infimum(const PiecewiseBM& process, std::uint64_t path_index) {
    return simulated_infimum(process, path_index, false);
}

MCEstimate ruin_prob_continuous(const PiecewiseBM& process, long paths, bool antithetic) {
    process.validate();
    if (paths <= 0)
        throw std::invalid_argument("ruin_prob_continuous: paths must be positive");
    long ruined = 0;
    for (long i = 0; i < paths; ++i) {
        const std::uint64_t stream = antithetic ? static_cast<std::uint64_t>(i >> 1)
                                                : static_cast<std::uint64_t>(i);
        const bool mirror = antithetic && (i & 1);
        if (simulated_infimum(process, stream, mirror) < 0.0)
            ++ruined;
    }
    const double p = static_cast<double>(ruined) / static_cast<double>(paths);
    return MCEstimate{p, std::sqrt(p * (1.0 - p) / static_cast<double>(paths)), paths,
                      process.seed};
}

SurvivalReport partial_sum_survival(const std::vector<GaussianIncrement>& increments,
                                    const std::vector<double>& levels, SurvivalMethod method,
                                    const SurvivalOptions& opts) {
    if (increments.empty() || increments.size() != levels.size())
        throw std::invalid_argument("partial_sum_survival: need one level per increment");
    for (const GaussianIncrement& inc : increments)
        if (inc.sd < 0.0 || !std::isfinite(inc.mean))
            throw std::invalid_argument("partial_sum_survival: bad increment");

    if (method == SurvivalMethod::monte_carlo)
        return mc_survival(increments, levels, opts);
    return quadrature_survival(fold(increments, levels), opts);
}

SurvivalReport survive_discrete(const PiecewiseBM& process, const std::vector<double>& check_times,
                                SurvivalMethod method, const SurvivalOptions& opts) {
    process.validate();
    if (check_times.empty())
        throw std::invalid_argument("survive_discrete: need at least one check time");

    const double total = process.total_duration();
    const double tol = 1e-9 * std::max(1.0, total);

    // Cumulative segment boundaries.
    std::vector<double> boundaries;
    boundaries.reserve(process.segments.size());
    double acc = 0.0;
    for (const Segment& seg : process.segments) {
        acc += seg.duration;
        boundaries.push_back(acc);
    }

    std::vector<GaussianIncrement> increments;
    std::vector<double> levels;
    double prev = 0.0;
    std::size_t seg_idx = 0;
    for (double t : check_times) {
        if (!(t > prev + tol))
            throw std::invalid_argument("survive_discrete: check times must be increasing and > 0");
        if (t > total + tol)
            throw UnsupportedError("survive_discrete: check time beyond the process horizon");
        double mean = 0.0, var = 0.0;
        bool on_boundary = false;
        while (seg_idx < process.segments.size()) {
            const Segment& seg = process.segments[seg_idx];
            mean += seg.drift * seg.duration;
            var += seg.vol * seg.vol * seg.duration;
            const double boundary = boundaries[seg_idx];
            ++seg_idx;
            if (std::abs(boundary - t) <= tol) {
                on_boundary = true;
                break;
            }
            if (boundary > t + tol)
                break;
        }
        if (!on_boundary)
            throw UnsupportedError("survive_discrete: check time is not a segment boundary");
        increments.push_back(GaussianIncrement{mean, std::sqrt(var)});
        levels.push_back(-process.x0);
        prev = t;
    }

    SurvivalOptions local = opts;
    local.seed = process.seed;
    return partial_sum_survival(increments, levels, method, local);
}

} // namespace tci
