#include <iostream>

#include "CLI11.hpp"

#include "tci/errors.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"two-period reinsurance and dividend strategy toolkit: solves retention pairs,\n"
                 "dividend plans, survival probabilities, and emits table/figure datasets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "tci 0.1.0");
    app.set_config("--config", "", "read option defaults from an INI file (flags override)");

    tci::cli::GlobalOpts global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", global.out, "output path (default: stdout)");
    app.add_option("--seed", global.seed, "random seed; TCI_SEED is the fallback, the flag wins")
        ->envname("TCI_SEED")
        ->capture_default_str();

    int rc = 0;
    tci::cli::register_dividend_plan(app, global, rc);
    tci::cli::register_survival_table(app, global, rc);
    tci::cli::register_figures(app, global, rc);
    tci::cli::register_mc_validate(app, global, rc);
    tci::cli::register_var_es(app, global, rc);
    tci::cli::register_reinsurance_solve(app, global, rc);
    tci::cli::register_penalisation(app, global, rc);
    tci::cli::register_three_period(app, global, rc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const tci::InfeasibleError& e) {
        std::cerr << "tci: infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "tci: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "tci: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "tci: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
