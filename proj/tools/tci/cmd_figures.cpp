#include <cmath>
#include <memory>

#include "tci/normal.hpp"

#include "commands.hpp"

namespace tci::cli {

namespace {

/// Model/target flags are optional here: each figure has its own reference
/// parameter set and unset flags fall back to it.
struct FigureFlags {
    std::string figure;
    std::optional<double> lambda, mu, mu2, eta, theta, T, M, delta;
    int grid = 0;    // 0 = per-figure default
    int samples = 0; // 0 = per-figure default
    long paths = 1000000;
};

struct FigureSetup {
    ReinsuranceModel model;
    double M;
    double delta;
};

FigureSetup resolve(const FigureFlags& flags, double lambda, double mu, double mu2, double eta,
                    double theta, double T, double M, double delta) {
    return {ReinsuranceModel{flags.lambda.value_or(lambda), flags.mu.value_or(mu),
                             flags.mu2.value_or(mu2), flags.eta.value_or(eta),
                             flags.theta.value_or(theta), flags.T.value_or(T)},
            flags.M.value_or(M), flags.delta.value_or(delta)};
}

Json setup_params(const FigureSetup& s, const std::string& figure) {
    Json p = Json::object();
    p["figure"] = figure;
    p["lambda"] = s.model.lambda;
    p["mu"] = s.model.mu;
    p["mu2"] = s.model.mu2;
    p["eta"] = s.model.eta;
    p["theta"] = s.model.theta;
    p["T"] = s.model.T;
    p["M"] = s.M;
    p["delta"] = s.delta;
    return p;
}

int emit_figure(const GlobalOpts& global, const FigureSetup& setup, const std::string& figure,
                Table table, Json extras) {
    Json doc = make_envelope("figures", global.seed, setup_params(setup, figure));
    for (auto& [key, value] : extras.items()) {
        doc[key] = std::move(value);
    }
    attach_table(doc, table);
    emit(global.output(), table, doc);
    return 0;
}

/// Retention curve b(t) = A/(A + C t) calibrated to the model's targets.
int run_curve(const FigureFlags& flags, const GlobalOpts& global) {
    FigureSetup setup = resolve(flags, 1.0, 0.05, 0.05, 0.3, 0.5, 2.5, 0.06, 0.15);
    auto [g1, g2] = curve_targets(setup.model, setup.M, setup.delta);
    CurveFit fit = solve_strategy_curve(g1, g2, setup.model.T);

    int grid = flags.grid > 0 ? flags.grid : 101;
    Table table;
    table.columns = {"t", "b"};
    for (int i = 0; i < grid; ++i) {
        double t = setup.model.T * double(i) / double(grid - 1);
        table.add_row({t, strategy_curve_value(fit, t)});
    }

    Json extras = Json::object();
    extras["A"] = fit.A;
    extras["C"] = fit.C;
    extras["g1"] = g1;
    extras["g2"] = g2;
    extras["residual1"] = fit.residual1;
    extras["residual2"] = fit.residual2;
    extras["iterations"] = fit.iterations;
    return emit_figure(global, setup, "1", std::move(table), std::move(extras));
}

/// Survival densities G0 (order b0 then b1) and G1 (order b1 then b0) over
/// the terminal value y, with the crossing level when the residual mean is
/// positive. Uses the same split of the first-half surplus as the
/// decomposition survival route, so each column integrates to the matching
/// survival probability.
int run_dominance(const FigureFlags& flags, const GlobalOpts& global) {
    FigureSetup setup = resolve(flags, 2.0, 0.22, 0.05, 0.34, 0.35, 1.0, 0.05, 0.13);
    TargetDist target{setup.M, setup.delta, setup.model.T};
    ReinsurancePair pair = solve_pair(setup.model, target);
    SurvivalDecomposition split = survival_decomposition(setup.model, target, pair);

    const double mean_y = setup.M * setup.model.T;
    const double sd_y = setup.delta * std::sqrt(setup.model.T);
    const double sd_z = std::sqrt(split.rho * split.gamma) * sd_y;
    auto g0 = [&](double y) {
        double tail = 1.0 - std_normal_cdf((-split.rho * y - split.ez0) / sd_z);
        return tail * std_normal_pdf((y - mean_y) / sd_y) / sd_y;
    };
    auto g1 = [&](double y) {
        double tail = 1.0 - std_normal_cdf((-split.gamma * y + split.ez0) / sd_z);
        return tail * std_normal_pdf((y - mean_y) / sd_y) / sd_y;
    };

    int grid = flags.grid > 0 ? flags.grid : 401;
    double y_max = mean_y + 4.0 * sd_y;
    Cell ystar = split.ystar ? Cell{*split.ystar} : Cell{};
    Table table;
    table.columns = {"y", "g0", "g1", "ystar"};
    for (int i = 0; i < grid; ++i) {
        double y = y_max * double(i) / double(grid - 1);
        table.add_row({y, g0(y), g1(y), ystar});
    }

    Json extras = Json::object();
    extras["b0"] = pair.b0;
    extras["b1"] = pair.b1;
    extras["rho"] = split.rho;
    extras["gamma"] = split.gamma;
    extras["ez0"] = split.ez0;
    extras["ystar"] = split.ystar ? Json(*split.ystar) : Json(nullptr);
    return emit_figure(global, setup, "dominance", std::move(table), std::move(extras));
}

/// Survival of the constant strategy versus the two switching orders as the
/// penalty rate grows from 0 towards the largest solvable value.
int run_penalisation(const FigureFlags& flags, const GlobalOpts& global) {
    FigureSetup setup = resolve(flags, 2.0, 0.22, 0.05, 0.3, 0.35, 1.0, 0.0, 0.2);
    double P_max = max_feasible_penalty(setup.model, setup.delta);
    double b_hat = setup.delta / std::sqrt(setup.model.lambda * setup.model.mu2);
    double M_prime = drift_of(setup.model, b_hat);

    int grid = flags.grid > 0 ? flags.grid : 21;
    SurvivalOptions opts = survival_options(global, flags.paths);
    Table table;
    table.columns = {"P", "p_descending", "p_constant", "p_ascending"};
    for (int i = 0; i < grid; ++i) {
        double P = 0.95 * P_max * double(i) / double(grid - 1);
        PenalisationResult result = penalisation_compare(setup.model, M_prime, P, setup.delta,
                                                         SurvivalAlgo::direct, opts);
        table.add_row({P, result.descending.probability, result.constant.probability,
                       result.ascending.probability});
    }

    Json extras = Json::object();
    extras["b_hat"] = b_hat;
    extras["M_prime"] = M_prime;
    extras["P_max"] = P_max;
    return emit_figure(global, setup, "penalisation", std::move(table), std::move(extras));
}

/// Admissible third-horizon triples: the circle cut out of the unit cube.
int run_circle(const FigureFlags& flags, const GlobalOpts& global) {
    FigureSetup setup = resolve(flags, 1.0, 0.15, 0.06, 0.2, 0.35, 1.0, 0.02, 0.2);
    TargetDist target{setup.M, setup.delta, setup.model.T};
    int samples = flags.samples > 0 ? flags.samples : 720;
    std::vector<ReinsuranceTriple> triples = three_period_circle(setup.model, target, samples);

    Table table;
    table.columns = {"b0", "b1", "b2"};
    for (const auto& triple : triples) {
        table.add_row({triple.b0, triple.b1, triple.b2});
    }

    Json extras = Json::object();
    extras["samples"] = samples;
    extras["kept"] = int(triples.size());
    return emit_figure(global, setup, "circle", std::move(table), std::move(extras));
}

/// Survival probability of each admissible triple against its first leg.
int run_n3(const FigureFlags& flags, const GlobalOpts& global) {
    FigureSetup setup = resolve(flags, 1.0, 0.15, 0.06, 0.2, 0.35, 1.0, 0.02, 0.2);
    TargetDist target{setup.M, setup.delta, setup.model.T};
    int samples = flags.samples > 0 ? flags.samples : 360;
    std::vector<ReinsuranceTriple> triples = three_period_circle(setup.model, target, samples);
    SurvivalOptions opts = survival_options(global, flags.paths);

    Table table;
    table.columns = {"b0", "b1", "b2", "survival", "method"};
    for (const auto& triple : triples) {
        SurvivalReport report =
            three_period_survival(setup.model, target, triple, SurvivalAlgo::direct, opts);
        std::string method =
            report.method == SurvivalMethod::monte_carlo ? "monte_carlo" : "quadrature";
        table.add_row({triple.b0, triple.b1, triple.b2, report.probability, method});
    }

    Json extras = Json::object();
    extras["samples"] = samples;
    extras["kept"] = int(triples.size());
    return emit_figure(global, setup, "n3", std::move(table), std::move(extras));
}

int run(const FigureFlags& flags, const GlobalOpts& global) {
    if (flags.figure == "1") {
        return run_curve(flags, global);
    }
    if (flags.figure == "dominance") {
        return run_dominance(flags, global);
    }
    if (flags.figure == "penalisation") {
        return run_penalisation(flags, global);
    }
    if (flags.figure == "circle") {
        return run_circle(flags, global);
    }
    return run_n3(flags, global);
}

} // namespace

void register_figures(CLI::App& app, const GlobalOpts& global, int& rc) {
    auto flags = std::make_shared<FigureFlags>();
    CLI::App* cmd = app.add_subcommand(
        "figures", "plot-ready datasets: retention curve, survival densities with their "
                   "crossing, penalisation sweep, admissible triples, and triple survival");
    cmd->fallthrough();
    cmd->add_option("--figure", flags->figure, "dataset id")
        ->required()
        ->check(CLI::IsMember({"1", "dominance", "penalisation", "circle", "n3"}));
    cmd->add_option("--lambda", flags->lambda, "claim arrival intensity (default per figure)");
    cmd->add_option("--mu", flags->mu, "mean claim size (default per figure)");
    cmd->add_option("--mu2", flags->mu2, "claim second moment (default per figure)");
    cmd->add_option("--eta", flags->eta, "insurer safety loading (default per figure)");
    cmd->add_option("--theta", flags->theta, "reinsurer safety loading (default per figure)");
    cmd->add_option("--T", flags->T, "horizon (default per figure)");
    cmd->add_option("--M", flags->M, "target mean rate (default per figure)");
    cmd->add_option("--delta", flags->delta, "target volatility (default per figure)");
    cmd->add_option("--grid", flags->grid, "points along the sweep axis (default per figure)")
        ->check(CLI::Range(2, 100000));
    cmd->add_option("--samples", flags->samples, "circle samples (circle/n3)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--paths", flags->paths, "Monte-Carlo paths for fallbacks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback([flags, &global, &rc] { rc = run(*flags, global); });
}

} // namespace tci::cli
