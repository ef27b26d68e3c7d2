#include <memory>

#include "commands.hpp"

namespace tci::cli {

namespace {

struct SolveFlags {
    ModelFlags model;
    double M = 0.05;
    double delta = 0.2;
    std::string bound_mode = "paper-example";
    std::string algo = "direct";
    long paths = 1000000;
};

int run(const SolveFlags& flags, const GlobalOpts& global) {
    ReinsuranceModel model = flags.model.build();
    TargetDist target{flags.M, flags.delta, flags.model.T};
    BoundMode mode =
        flags.bound_mode == "lemma-full" ? BoundMode::full : BoundMode::quadratic_only;

    FeasibilityRange range = feasibility_bounds(model, flags.M, mode);
    ReinsurancePair pair = solve_pair(model, target); // InfeasibleError -> exit 3
    SurvivalDecomposition split = survival_decomposition(model, target, pair);
    bool cheap = cheapness_condition(model, target);

    SurvivalAlgo algo = algo_from_name(flags.algo);
    SurvivalOptions opts = survival_options(global, flags.paths);
    SurvivalReport up = survival_prob(model, target, pair.b0, pair.b1, algo, opts);
    SurvivalReport down = survival_prob(model, target, pair.b1, pair.b0, algo, opts);
    std::string method = up.method == SurvivalMethod::monte_carlo ? "monte_carlo" : "quadrature";

    Table table;
    table.columns = {"b0",   "b1",    "rho",        "gamma",      "ez0",
                     "ystar", "cheap", "p_b0_first", "p_b1_first", "method",
                     "delta_min", "delta_max"};
    Cell ystar = split.ystar ? Cell{*split.ystar} : Cell{};
    table.add_row({pair.b0, pair.b1, split.rho, split.gamma, split.ez0, ystar,
                   cheap, up.probability, down.probability,
                   method, range.delta_min, range.delta_max});

    Json params = flags.model.params();
    params["M"] = flags.M;
    params["delta"] = flags.delta;
    params["bound_mode"] = flags.bound_mode;
    params["algo"] = flags.algo;
    params["paths"] = flags.paths;

    Json doc = make_envelope("reinsurance-solve", global.seed, std::move(params));
    doc["pair"] = {{"b0", pair.b0}, {"b1", pair.b1}};
    doc["decomposition"] = Json::object();
    doc["decomposition"]["rho"] = split.rho;
    doc["decomposition"]["gamma"] = split.gamma;
    doc["decomposition"]["ez0"] = split.ez0;
    doc["decomposition"]["varz0"] = split.varz0;
    doc["decomposition"]["ystar"] = split.ystar ? Json(*split.ystar) : Json(nullptr);
    doc["cheap"] = cheap;
    doc["feasibility"] = Json::object();
    doc["feasibility"]["mode"] = flags.bound_mode;
    doc["feasibility"]["feasible"] = range.feasible;
    doc["feasibility"]["delta_min"] = range.delta_min;
    doc["feasibility"]["delta_max"] = range.delta_max;
    doc["feasibility"]["reason"] = range.reason;
    auto report_json = [](const SurvivalReport& report) {
        Json entry = Json::object();
        entry["probability"] = report.probability;
        entry["method"] =
            report.method == SurvivalMethod::monte_carlo ? "monte_carlo" : "quadrature";
        entry["error_estimate"] = report.error_estimate;
        entry["evaluations"] = report.evaluations;
        return entry;
    };
    doc["survival"] = Json::object();
    doc["survival"]["b0_first"] = report_json(up);
    doc["survival"]["b1_first"] = report_json(down);
    attach_table(doc, table);
    emit(global.output(), table, doc);
    return 0;
}

} // namespace

void register_reinsurance_solve(CLI::App& app, const GlobalOpts& global, int& rc) {
    auto flags = std::make_shared<SolveFlags>();
    CLI::App* cmd = app.add_subcommand(
        "reinsurance-solve", "half-horizon retention pair reaching the Gaussian target, with "
                             "feasibility range, diagnostics, and both survival orders");
    cmd->fallthrough();
    add_model_options(cmd, flags->model);
    cmd->add_option("--M", flags->M, "target mean rate")->capture_default_str();
    cmd->add_option("--delta", flags->delta, "target volatility")->capture_default_str();
    cmd->add_option("--bound-mode", flags->bound_mode,
                    "volatility lower bound: quadratic term only, or with the linear term")
        ->check(CLI::IsMember({"paper-example", "lemma-full"}))
        ->capture_default_str();
    cmd->add_option("--algo", flags->algo, "survival algorithm")
        ->check(CLI::IsMember({"direct", "decomposition", "mc"}))
        ->capture_default_str();
    cmd->add_option("--paths", flags->paths, "Monte-Carlo paths (algo=mc)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->callback([flags, &global, &rc] { rc = run(*flags, global); });
}

} // namespace tci::cli
