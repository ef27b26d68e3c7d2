#include <cmath>
#include <memory>

#include "tci/errors.hpp"

#include "commands.hpp"

namespace tci::cli {

namespace {

struct McValidateFlags {
    ModelFlags model;
    double M = 0.05;
    double delta = 0.2;
    std::string etas = "0.25,0.26,0.27,0.28,0.29,0.30";
    long paths = 200000;
    double se_factor = 3.0;
};

int run(const McValidateFlags& flags, const GlobalOpts& global) {
    std::vector<double> etas = parse_double_list(flags.etas);
    SurvivalOptions opts = survival_options(global, flags.paths);

    Table table;
    table.columns = {"eta",    "order",    "p_quadrature", "p_mc",
                     "mc_std_err", "abs_diff", "within",        "status"};
    int feasible_rows = 0;
    bool all_within = true;
    for (double eta : etas) {
        ModelFlags row_flags = flags.model;
        row_flags.eta = eta;
        try {
            ReinsuranceModel model = row_flags.build();
            TargetDist target{flags.M, flags.delta, flags.model.T};
            ReinsurancePair pair = solve_pair(model, target);
            ++feasible_rows;
            const std::pair<double, double> orders[2] = {{pair.b0, pair.b1},
                                                         {pair.b1, pair.b0}};
            const char* names[2] = {"b0_first", "b1_first"};
            for (int i = 0; i < 2; ++i) {
                SurvivalReport quad = survival_prob(model, target, orders[i].first,
                                                    orders[i].second, SurvivalAlgo::direct, opts);
                SurvivalReport mc = survival_prob(model, target, orders[i].first,
                                                  orders[i].second, SurvivalAlgo::mc, opts);
                double diff = std::abs(quad.probability - mc.probability);
                bool within = diff <= flags.se_factor * mc.error_estimate;
                all_within = all_within && within;
                table.add_row({eta, std::string(names[i]), quad.probability, mc.probability,
                               mc.error_estimate, diff, within,
                               std::string("ok")});
            }
        } catch (const InfeasibleError& e) {
            table.add_row({eta, {}, {}, {}, {}, {}, {}, std::string("infeasible: ") + e.what()});
        }
    }

    Json params = flags.model.params();
    params.erase("eta");
    params["M"] = flags.M;
    params["delta"] = flags.delta;
    params["etas"] = etas;
    params["paths"] = flags.paths;
    params["se_factor"] = flags.se_factor;

    Json doc = make_envelope("mc-validate", global.seed, std::move(params));
    doc["all_within"] = all_within;
    attach_table(doc, table);
    emit(global.output(), table, doc);
    if (!etas.empty() && feasible_rows == 0) {
        return 3;
    }
    return all_within ? 0 : 4;
}

} // namespace

void register_mc_validate(CLI::App& app, const GlobalOpts& global, int& rc) {
    auto flags = std::make_shared<McValidateFlags>();
    CLI::App* cmd = app.add_subcommand(
        "mc-validate", "quadrature versus Monte-Carlo survival probabilities on the eta sweep; "
                       "exits 4 unless every comparison lands within the SE budget");
    cmd->fallthrough();
    add_model_options(cmd, flags->model);
    cmd->get_option("--eta")->group(""); // hidden: the sweep list replaces it
    cmd->add_option("--M", flags->M, "target mean rate")->capture_default_str();
    cmd->add_option("--delta", flags->delta, "target volatility")->capture_default_str();
    cmd->add_option("--etas", flags->etas, "comma-separated eta scenarios")
        ->join(',')
        ->capture_default_str();
    cmd->add_option("--paths", flags->paths, "Monte-Carlo paths per scenario")
        ->check(CLI::Range(long(10000), long(1000000000)))
        ->capture_default_str();
    cmd->add_option("--se-factor", flags->se_factor, "allowed |quadrature - MC| in MC standard errors")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->callback([flags, &global, &rc] { rc = run(*flags, global); });
}

} // namespace tci::cli
