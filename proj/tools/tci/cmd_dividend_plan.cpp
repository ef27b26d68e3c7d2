#include <iostream>
#include <memory>

#include "tci/dividend.hpp"

#include "commands.hpp"

namespace tci::cli {

namespace {

struct DividendFlags {
    double mubar = 1.0;
    double sigmabar = 0.2;
    double xi = 1.0;
    double x = 1.0;
    double T = 1.0;
    int n = 3;
    double r = 0.1;
    double M = 0.5;
    double delta = 0.0; // 0 = follow sigmabar
    bool delta_set = false;
};

int run(const DividendFlags& flags, const GlobalOpts& global) {
    double delta = flags.delta_set ? flags.delta : flags.sigmabar;
    DividendProblem problem{flags.mubar, flags.sigmabar, flags.xi, flags.x,
                            flags.T,     flags.n,        flags.r,
                            TargetDist{flags.M, delta, flags.T}};

    AdmissibilityVerdict verdict = check_target(problem);
    if (!verdict.ok) {
        std::cerr << "tci dividend-plan: target unreachable:";
        for (const auto& violation : verdict.violations) {
            std::cerr << " " << violation << ";";
        }
        std::cerr << "\n";
        return 2;
    }

    DividendStrategy pay_early = max_dividend_strategy(problem);
    DividendStrategy pay_late = min_ruin_strategy(problem);
    int kappa = full_rate_periods(problem);
    double switch_time = continuous_switch_time(problem);
    double value_max = discounted_value(pay_early, problem);
    double value_min = discounted_value(pay_late, problem);

    Table table;
    table.columns = {"period",        "rate_max_dividend",  "rate_min_ruin", "kappa",
                     "switch_time",   "value_max_dividend", "value_min_ruin"};
    for (int k = 0; k < flags.n; ++k) {
        table.add_row({double(k), pay_early.rates[size_t(k)], pay_late.rates[size_t(k)],
                       double(kappa), switch_time, value_max, value_min});
    }

    Json params = Json::object();
    params["mubar"] = flags.mubar;
    params["sigmabar"] = flags.sigmabar;
    params["xi"] = flags.xi;
    params["x"] = flags.x;
    params["T"] = flags.T;
    params["n"] = flags.n;
    params["r"] = flags.r;
    params["M"] = flags.M;
    params["delta"] = delta;

    Json doc = make_envelope("dividend-plan", global.seed, std::move(params));
    doc["admissible"] = true;
    doc["kappa"] = kappa;
    doc["switch_time"] = switch_time;
    doc["value_max_dividend"] = value_max;
    doc["value_min_ruin"] = value_min;
    doc["max_dividend_rates"] = pay_early.rates;
    doc["min_ruin_rates"] = pay_late.rates;
    attach_table(doc, table);

    emit(global.output(), table, doc);
    return 0;
}

} // namespace

void register_dividend_plan(CLI::App& app, const GlobalOpts& global, int& rc) {
    auto flags = std::make_shared<DividendFlags>();
    CLI::App* cmd = app.add_subcommand(
        "dividend-plan", "per-period payout rates that reach a Gaussian terminal target, for "
                         "both the value-optimal and the survival-optimal objective");
    cmd->fallthrough();
    cmd->add_option("--mubar", flags->mubar, "premium income rate")->capture_default_str();
    cmd->add_option("--sigmabar", flags->sigmabar, "surplus volatility")->capture_default_str();
    cmd->add_option("--xi", flags->xi, "maximal dividend rate per period")->capture_default_str();
    cmd->add_option("--x", flags->x, "initial surplus")->capture_default_str();
    cmd->add_option("--T", flags->T, "horizon")->capture_default_str();
    cmd->add_option("--n", flags->n, "number of payout periods")->capture_default_str();
    cmd->add_option("--r", flags->r, "discount rate")->capture_default_str();
    cmd->add_option("--M", flags->M, "target mean rate")->capture_default_str();
    CLI::Option* delta_opt =
        cmd->add_option("--delta", flags->delta, "target volatility (default: --sigmabar)");
    cmd->callback([flags, delta_opt, &global, &rc] {
        flags->delta_set = delta_opt->count() > 0;
        rc = run(*flags, global);
    });
}

} // namespace tci::cli
