#include <cmath>
#include <memory>

#include "commands.hpp"

namespace tci::cli {

namespace {

struct PenalisationFlags {
    ModelFlags model;
    double delta = 0.2;
    double P = 0.01;
    std::string algo = "direct";
    long paths = 1000000;
};

int run(const PenalisationFlags& flags, const GlobalOpts& global) {
    ReinsuranceModel model = flags.model.build();
    double P_max = max_feasible_penalty(model, flags.delta); // InfeasibleError -> exit 3

    double b_hat = flags.delta / std::sqrt(model.lambda * model.mu2);
    double M_prime = drift_of(model, b_hat);
    SurvivalAlgo algo = algo_from_name(flags.algo);
    SurvivalOptions opts = survival_options(global, flags.paths);
    PenalisationResult result =
        penalisation_compare(model, M_prime, flags.P, flags.delta, algo, opts);
    std::string method = result.constant.method == SurvivalMethod::monte_carlo ? "monte_carlo"
                                                                               : "quadrature";

    Table table;
    table.columns = {"b_hat",      "M_prime",      "P",           "P_max",       "b0",
                     "b1",         "p_constant",   "p_descending", "p_ascending", "method"};
    table.add_row({result.b_hat, result.M_prime, flags.P, P_max, result.pair.b0,
                   result.pair.b1, result.constant.probability, result.descending.probability,
                   result.ascending.probability, method});

    Json params = flags.model.params();
    params["delta"] = flags.delta;
    params["P"] = flags.P;
    params["algo"] = flags.algo;
    params["paths"] = flags.paths;

    Json doc = make_envelope("penalisation", global.seed, std::move(params));
    doc["b_hat"] = result.b_hat;
    doc["M_prime"] = result.M_prime;
    doc["P_max"] = P_max;
    doc["pair"] = {{"b0", result.pair.b0}, {"b1", result.pair.b1}};
    doc["p_constant"] = result.constant.probability;
    doc["p_descending"] = result.descending.probability;
    doc["p_ascending"] = result.ascending.probability;
    doc["method"] = method;
    attach_table(doc, table);
    emit(global.output(), table, doc);
    return 0;
}

} // namespace

void register_penalisation(CLI::App& app, const GlobalOpts& global, int& rc) {
    auto flags = std::make_shared<PenalisationFlags>();
    CLI::App* cmd = app.add_subcommand(
        "penalisation", "constant variance-matching retention versus switching strategies "
                        "that pay a mid-horizon update penalty");
    cmd->fallthrough();
    add_model_options(cmd, flags->model);
    cmd->add_option("--delta", flags->delta, "target volatility")->capture_default_str();
    cmd->add_option("--P", flags->P, "penalty rate, charged as P*T at T/2")
        ->check(CLI::NonNegativeNumber)
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
