#include <memory>
#include <stdexcept>

#include "tci/normal.hpp"

#include "commands.hpp"

namespace tci::cli {

namespace {

struct VarEsFlags {
    double M = 0.0;
    double delta = 1.0;
    double T = 1.0;
    std::string alpha = "0.975";
};

int run(const VarEsFlags& flags, const GlobalOpts& global) {
    std::vector<double> alphas = parse_double_list(flags.alpha);
    if (alphas.empty()) {
        throw std::invalid_argument("var-es: need at least one alpha");
    }
    TargetDist target{flags.M, flags.delta, flags.T};

    Table table;
    table.columns = {"alpha", "var", "es"};
    for (double alpha : alphas) {
        RiskMeasures risk = var_es(target, alpha);
        table.add_row({alpha, risk.var, risk.es});
    }

    Json params = Json::object();
    params["M"] = flags.M;
    params["delta"] = flags.delta;
    params["T"] = flags.T;
    params["alpha"] = alphas;

    Json doc = make_envelope("var-es", global.seed, std::move(params));
    attach_table(doc, table);
    emit(global.output(), table, doc);
    return 0;
}

} // namespace

void register_var_es(CLI::App& app, const GlobalOpts& global, int& rc) {
    auto flags = std::make_shared<VarEsFlags>();
    CLI::App* cmd = app.add_subcommand(
        "var-es", "closed-form value-at-risk and expected shortfall of the Gaussian "
                  "terminal loss");
    cmd->fallthrough();
    cmd->add_option("--M", flags->M, "target mean rate")->capture_default_str();
    cmd->add_option("--delta", flags->delta, "target volatility")->capture_default_str();
    cmd->add_option("--T", flags->T, "horizon")->capture_default_str();
    cmd->add_option("--alpha", flags->alpha, "confidence level(s), comma-separated")
        ->join(',')
        ->capture_default_str();
    cmd->callback([flags, &global, &rc] { rc = run(*flags, global); });
}

} // namespace tci::cli
