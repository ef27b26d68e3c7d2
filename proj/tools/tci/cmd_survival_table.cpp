#include <memory>

#include "tci/errors.hpp"

#include "commands.hpp"

namespace tci::cli {

namespace {

struct SurvivalTableFlags {
    ModelFlags model;
    double M = 0.05;
    double delta = 0.2;
    std::string etas = "0.25,0.26,0.27,0.28,0.29,0.30";
    std::string algo = "direct";
    long paths = 1000000;
};

int run(const SurvivalTableFlags& flags, const GlobalOpts& global) {
    std::vector<double> etas = parse_double_list(flags.etas);
    SurvivalAlgo algo = algo_from_name(flags.algo);
    SurvivalOptions opts = survival_options(global, flags.paths);

    Table table;
    table.columns = {"eta", "b0", "b1", "p_b0_first", "p_b1_first", "method", "status"};
    int feasible_rows = 0;
    for (double eta : etas) {
        ModelFlags row_flags = flags.model;
        row_flags.eta = eta;
        try {
            ReinsuranceModel model = row_flags.build();
            TargetDist target{flags.M, flags.delta, flags.model.T};
            ReinsurancePair pair = solve_pair(model, target);
            SurvivalReport up = survival_prob(model, target, pair.b0, pair.b1, algo, opts);
            SurvivalReport down = survival_prob(model, target, pair.b1, pair.b0, algo, opts);
            std::string method =
                up.method == SurvivalMethod::monte_carlo ? "monte_carlo" : "quadrature";
            table.add_row({eta, pair.b0, pair.b1, up.probability, down.probability, method,
                           std::string("ok")});
            ++feasible_rows;
        } catch (const InfeasibleError& e) {
            table.add_row({eta, {}, {}, {}, {}, {}, std::string("infeasible: ") + e.what()});
        } catch (const std::invalid_argument& e) {
            table.add_row({eta, {}, {}, {}, {}, {}, std::string("invalid: ") + e.what()});
        }
    }

    Json params = flags.model.params();
    params.erase("eta"); // swept, not fixed
    params["M"] = flags.M;
    params["delta"] = flags.delta;
    params["etas"] = etas;
    params["algo"] = flags.algo;
    params["paths"] = flags.paths;

    Json doc = make_envelope("survival-table", global.seed, std::move(params));
    attach_table(doc, table);
    emit(global.output(), table, doc);
    return (!etas.empty() && feasible_rows == 0) ? 3 : 0;
}

} // namespace

void register_survival_table(CLI::App& app, const GlobalOpts& global, int& rc) {
    auto flags = std::make_shared<SurvivalTableFlags>();
    CLI::App* cmd = app.add_subcommand(
        "survival-table", "retention pairs and two-checkpoint survival probabilities (both "
                          "payout orders) swept over the insurer loading eta");
    cmd->fallthrough();
    add_model_options(cmd, flags->model);
    cmd->get_option("--eta")->group(""); // hidden: the sweep list replaces it
    cmd->add_option("--M", flags->M, "target mean rate")->capture_default_str();
    cmd->add_option("--delta", flags->delta, "target volatility")->capture_default_str();
    cmd->add_option("--etas", flags->etas, "comma-separated eta sweep, \"\" for none")
        ->join(',')
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
