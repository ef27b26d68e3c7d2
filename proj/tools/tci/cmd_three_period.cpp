#include <algorithm>
#include <iostream>
#include <memory>

#include "tci/errors.hpp"

#include "commands.hpp"

namespace tci::cli {

namespace {

struct ThreePeriodFlags {
    ModelFlags model{1.0, 0.15, 0.06, 0.2, 0.35, 1.0};
    double M = 0.02;
    double delta = 0.2;
    std::optional<double> b0;
    std::optional<double> b1;
    std::optional<double> b2;
    int samples = 720;
    std::string algo = "direct";
    long paths = 1000000;
};

int run(const ThreePeriodFlags& flags, const GlobalOpts& global) {
    ReinsuranceModel model = flags.model.build();
    TargetDist target{flags.M, flags.delta, flags.model.T};

    int given = int(flags.b0.has_value()) + int(flags.b1.has_value()) + int(flags.b2.has_value());
    ReinsuranceTriple triple{};
    if (given == 3) {
        triple = {*flags.b0, *flags.b1, *flags.b2};
    } else if (given == 0) {
        // Best admissible plan: the circle point with the largest first
        // retention, later components sorted descending.
        std::vector<ReinsuranceTriple> circle =
            three_period_circle(model, target, flags.samples);
        if (circle.empty()) {
            std::cerr << "tci three-period: no admissible triple inside the unit cube\n";
            return 3;
        }
        triple = *std::max_element(circle.begin(), circle.end(),
                                   [](const auto& a, const auto& b) { return a.b0 < b.b0; });
        if (triple.b1 < triple.b2) {
            std::swap(triple.b1, triple.b2);
        }
    } else {
        std::cerr << "tci three-period: give all of --b0 --b1 --b2 or none\n";
        return 2;
    }

    SurvivalAlgo algo = algo_from_name(flags.algo);
    SurvivalOptions opts = survival_options(global, flags.paths);
    SurvivalReport report = three_period_survival(model, target, triple, algo, opts);
    std::string method =
        report.method == SurvivalMethod::monte_carlo ? "monte_carlo" : "quadrature";

    Table table;
    table.columns = {"b0", "b1", "b2", "survival", "method", "error_estimate", "fallback"};
    table.add_row({triple.b0, triple.b1, triple.b2, report.probability, method,
                   report.error_estimate, report.quadrature_fallback});

    Json params = flags.model.params();
    params["M"] = flags.M;
    params["delta"] = flags.delta;
    params["samples"] = flags.samples;
    params["algo"] = flags.algo;
    params["paths"] = flags.paths;

    Json doc = make_envelope("three-period", global.seed, std::move(params));
    doc["triple"] = {{"b0", triple.b0}, {"b1", triple.b1}, {"b2", triple.b2}};
    doc["survival"] = report.probability;
    doc["method"] = method;
    doc["error_estimate"] = report.error_estimate;
    doc["evaluations"] = report.evaluations;
    doc["quadrature_fallback"] = report.quadrature_fallback;
    doc["note"] = report.note;
    attach_table(doc, table);
    emit(global.output(), table, doc);
    return 0;
}

} // namespace

void register_three_period(CLI::App& app, const GlobalOpts& global, int& rc) {
    auto flags = std::make_shared<ThreePeriodFlags>();
    CLI::App* cmd = app.add_subcommand(
        "three-period", "survival probability of a third-horizon retention triple; without an "
                        "explicit triple, picks the admissible one with the largest first leg");
    cmd->fallthrough();
    add_model_options(cmd, flags->model);
    cmd->add_option("--M", flags->M, "target mean rate")->capture_default_str();
    cmd->add_option("--delta", flags->delta, "target volatility")->capture_default_str();
    cmd->add_option("--b0", flags->b0, "first-period retention");
    cmd->add_option("--b1", flags->b1, "second-period retention");
    cmd->add_option("--b2", flags->b2, "third-period retention");
    cmd->add_option("--samples", flags->samples, "circle samples for the default triple")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--algo", flags->algo, "survival algorithm")
        ->check(CLI::IsMember({"direct", "decomposition", "mc"}))
        ->capture_default_str();
    cmd->add_option("--paths", flags->paths, "Monte-Carlo paths")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback([flags, &global, &rc] { rc = run(*flags, global); });
}

} // namespace tci::cli
