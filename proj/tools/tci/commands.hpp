#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tci/reinsurance.hpp"
#include "tci/ruin_mc.hpp"

#include "output.hpp"

namespace tci::cli {

/// Options shared by every subcommand; --seed falls back to the TCI_SEED
/// environment variable, the flag winning when both are present.
struct GlobalOpts {
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 1;

    OutputOpts output() const { return {format, out}; }
};

/// Claim-process parameters; defaults differ per subcommand.
struct ModelFlags {
    double lambda = 2.0;
    double mu = 0.22;
    double mu2 = 0.05;
    double eta = 0.3;
    double theta = 0.35;
    double T = 1.0;

    ReinsuranceModel build() const { return {lambda, mu, mu2, eta, theta, T}; }
    Json params() const;
};

/// Adds --lambda --mu --mu2 --eta --theta --T with the struct's current
/// values as defaults.
void add_model_options(CLI::App* cmd, ModelFlags& flags);

/// Comma-separated doubles; empty tokens are skipped, so "" is an empty
/// list. Throws std::invalid_argument on garbage.
std::vector<double> parse_double_list(const std::string& text);

/// Names accepted by the --algo flag.
SurvivalAlgo algo_from_name(const std::string& name);

/// Monte-Carlo and quadrature knobs wired to --paths and the global seed.
SurvivalOptions survival_options(const GlobalOpts& global, long paths);

void register_dividend_plan(CLI::App& app, const GlobalOpts& global, int& rc);
void register_survival_table(CLI::App& app, const GlobalOpts& global, int& rc);
void register_figures(CLI::App& app, const GlobalOpts& global, int& rc);
void register_mc_validate(CLI::App& app, const GlobalOpts& global, int& rc);
void register_var_es(CLI::App& app, const GlobalOpts& global, int& rc);
void register_reinsurance_solve(CLI::App& app, const GlobalOpts& global, int& rc);
void register_penalisation(CLI::App& app, const GlobalOpts& global, int& rc);
void register_three_period(CLI::App& app, const GlobalOpts& global, int& rc);

} // namespace tci::cli
