#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "json.hpp"

#include "tci/dividend.hpp"
#include "tci/normal.hpp"
#include "tci/reinsurance.hpp"

#include "support/schema_check.hpp"

// Exercises the installed command-line binary end to end: output tables,
// JSON schemas, exit codes, seeds, and the config file. The binary path
// arrives in TCI_BIN and the schema directory in TCI_SCHEMAS.

namespace {

using nlohmann::json;

std::string env_or_die(const char* name) {
    const char* value = std::getenv(name);
    if (value == nullptr) {
        std::fprintf(stderr, "environment variable %s is required\n", name);
        std::exit(1);
    }
    return value;
}

std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted += c;
        }
    }
    quoted += '\'';
    return quoted;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string errfile = "/tmp/tci_cli_err_" + std::to_string(getpid()) + "_" +
                                std::to_string(counter++);
    std::string cmd;
    if (!env_prefix.empty()) {
        cmd += env_prefix + " ";
    }
    cmd += shell_quote(env_or_die("TCI_BIN")) + " " + args + " 2>" + shell_quote(errfile);

    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.out.append(buf, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    std::ifstream ef(errfile);
    std::stringstream ss;
    ss << ef.rdbuf();
    result.err = ss.str();
    std::remove(errfile.c_str());
    return result;
}

// Minimal RFC-4180 reader: quoted fields, doubled quotes, '\n' row ends.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
        } else {
            field += c;
        }
    }
    if (!field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

json load_schema(const std::string& name) {
    std::ifstream file(env_or_die("TCI_SCHEMAS") + "/" + name);
    REQUIRE_MESSAGE(file.good(), "cannot open schema ", name);
    return json::parse(file);
}

void expect_schema(const std::string& schema_name, const json& doc) {
    const auto errors = schema_check::validate(load_schema(schema_name), doc);
    std::string joined;
    for (const auto& e : errors) {
        joined += e + "; ";
    }
    CHECK_MESSAGE(errors.empty(), joined);
}

json run_json(const std::string& args, int expected_exit = 0) {
    RunResult res = run_cli(args + " --format json");
    REQUIRE_MESSAGE(res.exit_code == expected_exit, res.err);
    return json::parse(res.out);
}

const tci::ReinsuranceModel kTableModel{2.0, 0.22, 0.05, 0.25, 0.35, 1.0};

} // namespace

TEST_CASE("help, version, and bad invocations map to the exit contract") {
    RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("survival-table") != std::string::npos);
    CHECK(run_cli("--version").out.find("tci") != std::string::npos);
    CHECK(run_cli("survival-table --help").exit_code == 0);

    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("survival-table --no-such-flag 1").exit_code == 2);
    CHECK(run_cli("figures --figure nope").exit_code == 2);
    CHECK(run_cli("survival-table --format yaml").exit_code == 2);
    CHECK(run_cli("").exit_code == 2); // a subcommand is required
}

TEST_CASE("dividend-plan emits both payout plans with thresholds") {
    RunResult res = run_cli("dividend-plan");
    REQUIRE(res.exit_code == 0);
    auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 4); // header + three periods
    CHECK(rows[0][0] == "period");
    // mubar=1, M=0.5, xi=1, n=3: pay-early plan (1, 0.5, 0), pay-late reversed.
    CHECK(std::stod(rows[1][1]) == 1.0);
    CHECK(std::stod(rows[2][1]) == 0.5);
    CHECK(std::stod(rows[3][1]) == 0.0);
    CHECK(std::stod(rows[1][2]) == 0.0);
    CHECK(std::stod(rows[2][2]) == 0.5);
    CHECK(std::stod(rows[3][2]) == 1.0);
    CHECK(std::stod(rows[1][3]) == 1.0);  // kappa
    CHECK(std::stod(rows[1][4]) == 0.5);  // switch time
}

TEST_CASE("dividend-plan rejects unreachable targets with exit 2") {
    RunResult above = run_cli("dividend-plan --M 2.0");
    CHECK(above.exit_code == 2);
    CHECK(above.err.find("exceeds") != std::string::npos);

    RunResult below = run_cli("dividend-plan --M -0.6");
    CHECK(below.exit_code == 2);
    CHECK(below.err.find("below") != std::string::npos);

    RunResult variance = run_cli("dividend-plan --delta 0.4");
    CHECK(variance.exit_code == 2);
    CHECK(variance.err.find("variance") != std::string::npos);
}

TEST_CASE("dividend-plan json round-trips the library result through its schema") {
    json doc = run_json("dividend-plan");
    expect_schema("dividend-plan.schema.json", doc);

    tci::DividendProblem problem{1.0, 0.2, 1.0, 1.0, 1.0, 3, 0.1, tci::TargetDist{0.5, 0.2, 1.0}};
    tci::DividendStrategy early = tci::max_dividend_strategy(problem);
    tci::DividendStrategy late = tci::min_ruin_strategy(problem);
    REQUIRE(doc["max_dividend_rates"].size() == early.rates.size());
    for (size_t k = 0; k < early.rates.size(); ++k) {
        CHECK(doc["max_dividend_rates"][k].get<double>() == early.rates[k]);
        CHECK(doc["min_ruin_rates"][k].get<double>() == late.rates[k]);
    }
    CHECK(doc["kappa"].get<int>() == tci::full_rate_periods(problem));
    CHECK(doc["switch_time"].get<double>() == tci::continuous_switch_time(problem));
    CHECK(doc["value_max_dividend"].get<double>() == tci::discounted_value(early, problem));
    CHECK(doc["value_min_ruin"].get<double>() == tci::discounted_value(late, problem));
}

TEST_CASE("survival-table reproduces the reference sweep") {
    RunResult res = run_cli("survival-table");
    REQUIRE(res.exit_code == 0);
    auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 7);
    const double etas[6] = {0.25, 0.26, 0.27, 0.28, 0.29, 0.30};
    for (int i = 0; i < 6; ++i) {
        tci::ReinsuranceModel model{2.0, 0.22, 0.05, etas[i], 0.35, 1.0};
        tci::TargetDist target{0.05, 0.2, 1.0};
        tci::ReinsurancePair pair = tci::solve_pair(model, target);
        const auto& row = rows[size_t(i) + 1];
        CHECK(std::stod(row[1]) == doctest::Approx(pair.b0).epsilon(2e-6));
        CHECK(std::stod(row[2]) == doctest::Approx(pair.b1).epsilon(2e-6));
        double p_up = tci::survival_prob(model, target, pair.b0, pair.b1,
                                         tci::SurvivalAlgo::direct)
                          .probability;
        double p_down = tci::survival_prob(model, target, pair.b1, pair.b0,
                                           tci::SurvivalAlgo::direct)
                            .probability;
        CHECK(std::stod(row[3]) == doctest::Approx(p_up).epsilon(2e-6));
        CHECK(std::stod(row[4]) == doctest::Approx(p_down).epsilon(2e-6));
        CHECK(std::stod(row[4]) > std::stod(row[3])); // late retention first wins
        CHECK(row[6] == "ok");
    }

    json doc = run_json("survival-table");
    expect_schema("survival-table.schema.json", doc);
}

TEST_CASE("survival-table honours the partial-failure contract") {
    RunResult empty = run_cli("survival-table --etas \"\"");
    CHECK(empty.exit_code == 0);
    CHECK(parse_csv(empty.out).size() == 1); // header only

    RunResult partial = run_cli("survival-table --etas 0.25,0.34");
    CHECK(partial.exit_code == 0);
    auto rows = parse_csv(partial.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][6] == "ok");
    CHECK(rows[2][6].find("infeasible") != std::string::npos);
    CHECK(rows[2][1].empty()); // no b0 for the failed row

    CHECK(run_cli("survival-table --etas 0.34").exit_code == 3);
}

TEST_CASE("csv quoting survives fields with commas") {
    RunResult res = run_cli("survival-table --lambda -1 --etas 0.25");
    CHECK(res.exit_code == 3); // no row could be solved
    CHECK(res.out.find('"') != std::string::npos);
    auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][6] == "invalid: ReinsuranceModel: lambda, mu, mu2 must be > 0");
}

TEST_CASE("var-es surfaces the closed forms") {
    RunResult res = run_cli("var-es --alpha 0.9,0.975,0.995");
    REQUIRE(res.exit_code == 0);
    auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 4);
    CHECK(std::stod(rows[2][1]) == doctest::Approx(1.959964).epsilon(1e-5));
    CHECK(std::stod(rows[2][2]) == doctest::Approx(2.337803).epsilon(1e-5));

    json doc = run_json("var-es --M 0.05 --delta 0.2 --T 1 --alpha 0.5");
    expect_schema("var-es.schema.json", doc);
    tci::RiskMeasures risk = tci::var_es(tci::TargetDist{0.05, 0.2, 1.0}, 0.5);
    CHECK(doc["rows"][0]["var"].get<double>() == risk.var);
    CHECK(doc["rows"][0]["es"].get<double>() == risk.es);

    CHECK(run_cli("var-es --alpha 1.5").exit_code == 2);
    CHECK(run_cli("var-es --alpha \"\"").exit_code == 2);
    CHECK(run_cli("var-es --alpha junk").exit_code == 2);
}

TEST_CASE("figures curve starts at full retention and matches the solver") {
    RunResult res = run_cli("figures --figure 1");
    REQUIRE(res.exit_code == 0);
    auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 102);
    CHECK(std::stod(rows[1][0]) == 0.0);
    CHECK(std::stod(rows[1][1]) == 1.0); // b(0) = A/A

    json doc = run_json("figures --figure 1");
    expect_schema("figures.schema.json", doc);
    tci::ReinsuranceModel model{1.0, 0.05, 0.05, 0.3, 0.5, 2.5};
    auto [g1, g2] = tci::curve_targets(model, 0.06, 0.15);
    tci::CurveFit fit = tci::solve_strategy_curve(g1, g2, 2.5);
    CHECK(doc["A"].get<double>() == fit.A);
    CHECK(doc["C"].get<double>() == fit.C);
    CHECK(doc["rows"][0]["b"].get<double>() == 1.0);
}

TEST_CASE("figures dominance crosses exactly once at the reported level") {
    json doc = run_json("figures --figure dominance");
    expect_schema("figures.schema.json", doc);

    REQUIRE_FALSE(doc["ystar"].is_null());
    const double ystar = doc["ystar"].get<double>();
    tci::ReinsuranceModel model{2.0, 0.22, 0.05, 0.34, 0.35, 1.0};
    tci::TargetDist target{0.05, 0.13, 1.0};
    tci::SurvivalDecomposition split =
        tci::survival_decomposition(model, target, tci::solve_pair(model, target));
    REQUIRE(split.ystar.has_value());
    CHECK(ystar == *split.ystar);

    const auto& rows = doc["rows"];
    int sign_changes = 0;
    double flip_lo = 0.0, flip_hi = 0.0;
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        double d0 = rows[i]["g1"].get<double>() - rows[i]["g0"].get<double>();
        double d1 = rows[i + 1]["g1"].get<double>() - rows[i + 1]["g0"].get<double>();
        if (d0 * d1 < 0.0) {
            ++sign_changes;
            flip_lo = rows[i]["y"].get<double>();
            flip_hi = rows[i + 1]["y"].get<double>();
        }
    }
    CHECK(sign_changes == 1);
    CHECK(flip_lo <= ystar);
    CHECK(ystar <= flip_hi);
}

TEST_CASE("figures penalisation keeps the strategy ordering for P > 0") {
    json doc = run_json("figures --figure penalisation --grid 8");
    expect_schema("figures.schema.json", doc);

    tci::ReinsuranceModel model{2.0, 0.22, 0.05, 0.3, 0.35, 1.0};
    CHECK(doc["P_max"].get<double>() == tci::max_feasible_penalty(model, 0.2));

    const auto& rows = doc["rows"];
    REQUIRE(rows.size() == 8);
    CHECK(rows[0]["P"].get<double>() == 0.0);
    CHECK(rows[0]["p_descending"].get<double>() ==
          doctest::Approx(rows[0]["p_constant"].get<double>()).epsilon(1e-6));
    for (size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i]["p_descending"].get<double>() > rows[i]["p_constant"].get<double>());
        CHECK(rows[i]["p_constant"].get<double>() > rows[i]["p_ascending"].get<double>());
    }
}

TEST_CASE("figures circle emits exactly the admissible triples") {
    json doc = run_json("figures --figure circle --samples 72");
    expect_schema("figures.schema.json", doc);
    const auto& rows = doc["rows"];
    CHECK(doc["kept"].get<int>() == int(rows.size()));
    CHECK(rows.size() == 72); // delta = 0.2 keeps the whole circle inside the cube

    tci::ReinsuranceModel model{1.0, 0.15, 0.06, 0.2, 0.35, 1.0};
    const double sum_target =
        3.0 * (0.02 + model.lambda * model.mu * (model.theta - model.eta)) /
        (model.lambda * model.mu * model.theta);
    const double sumsq_target = 3.0 * 0.2 * 0.2 / (model.lambda * model.mu2);
    for (const auto& row : rows) {
        double b0 = row["b0"].get<double>(), b1 = row["b1"].get<double>(),
               b2 = row["b2"].get<double>();
        CHECK(b0 >= 0.0);
        CHECK(b0 <= 1.0);
        CHECK(b1 >= 0.0);
        CHECK(b1 <= 1.0);
        CHECK(b2 >= 0.0);
        CHECK(b2 <= 1.0);
        CHECK(b0 + b1 + b2 == doctest::Approx(sum_target).epsilon(1e-10));
        CHECK(b0 * b0 + b1 * b1 + b2 * b2 == doctest::Approx(sumsq_target).epsilon(1e-10));
    }

    // Tighter variance target: nothing fits in the cube, dataset is empty.
    json none = run_json("figures --figure circle --delta 0.21 --samples 72");
    CHECK(none["rows"].empty());
    // Below the attainable variance the circle itself is empty: infeasible.
    CHECK(run_cli("figures --figure circle --delta 0.19").exit_code == 3);
}

TEST_CASE("figures n3 pairs each triple with its survival probability") {
    json doc = run_json("figures --figure n3 --samples 24");
    expect_schema("figures.schema.json", doc);
    const auto& rows = doc["rows"];
    REQUIRE(rows.size() == 24);
    double best_survival = -1.0, best_b0 = -1.0, max_b0 = -1.0;
    for (const auto& row : rows) {
        double survival = row["survival"].get<double>();
        CHECK(survival > 0.0);
        CHECK(survival < 1.0);
        CHECK(row["method"].get<std::string>() == "quadrature");
        if (survival > best_survival) {
            best_survival = survival;
            best_b0 = row["b0"].get<double>();
        }
        max_b0 = std::max(max_b0, row["b0"].get<double>());
    }
    // The best plan starts with (nearly) the largest first-period retention.
    CHECK(best_b0 >= 0.95 * max_b0);
}

TEST_CASE("mc-validate agrees at the default seed and honours --se-factor") {
    RunResult res = run_cli("mc-validate");
    CHECK(res.exit_code == 0);
    auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 13); // header + 6 etas x 2 orders

    json doc = run_json("mc-validate");
    expect_schema("mc-validate.schema.json", doc);
    CHECK(doc["all_within"].get<bool>());

    CHECK(run_cli("mc-validate --se-factor 0").exit_code == 4);
    CHECK(run_cli("mc-validate --paths 100").exit_code == 2); // below the floor
}

TEST_CASE("fixed seeds reproduce identical bytes and the flag beats the environment") {
    const std::string args = "mc-validate --paths 20000";
    RunResult first = run_cli(args + " --seed 5");
    RunResult second = run_cli(args + " --seed 5");
    CHECK(first.out == second.out);

    RunResult from_env = run_cli(args, "TCI_SEED=5");
    CHECK(from_env.out == first.out);

    RunResult nine = run_cli(args + " --seed 9");
    RunResult flag_wins = run_cli(args + " --seed 9", "TCI_SEED=5");
    CHECK(flag_wins.out == nine.out);
    CHECK(nine.out != first.out);
}

TEST_CASE("reinsurance-solve reports the pair, diagnostics, and bounds") {
    json doc = run_json("reinsurance-solve --eta 0.25");
    expect_schema("reinsurance-solve.schema.json", doc);

    tci::TargetDist target{0.05, 0.2, 1.0};
    tci::ReinsurancePair pair = tci::solve_pair(kTableModel, target);
    CHECK(doc["pair"]["b0"].get<double>() == pair.b0);
    CHECK(doc["pair"]["b1"].get<double>() == pair.b1);
    tci::SurvivalDecomposition split = tci::survival_decomposition(kTableModel, target, pair);
    CHECK(doc["decomposition"]["rho"].get<double>() == split.rho);
    CHECK(doc["decomposition"]["ez0"].get<double>() == split.ez0);
    CHECK(doc["decomposition"]["ystar"].is_null()); // ez0 < 0 on this row
    CHECK_FALSE(doc["cheap"].get<bool>());
    double p_up =
        tci::survival_prob(kTableModel, target, pair.b0, pair.b1, tci::SurvivalAlgo::direct)
            .probability;
    CHECK(doc["survival"]["b0_first"]["probability"].get<double>() == p_up);

    // Worked feasibility range: quadratic bound mode, then with the linear term.
    tci::ReinsuranceModel loaded{2.0, 0.22, 0.05, 0.3, 0.35, 1.0};
    json quad = run_json("reinsurance-solve --eta 0.3 --M 0.08 --delta 0.22");
    tci::FeasibilityRange narrow =
        tci::feasibility_bounds(loaded, 0.08, tci::BoundMode::quadratic_only);
    CHECK(quad["feasibility"]["delta_min"].get<double>() == narrow.delta_min);
    CHECK(quad["feasibility"]["delta_max"].get<double>() == narrow.delta_max);
    CHECK(narrow.delta_min == doctest::Approx(0.2094).epsilon(1e-3));
    CHECK(narrow.delta_max == doctest::Approx(0.2962).epsilon(1e-3));
    json full =
        run_json("reinsurance-solve --eta 0.3 --M 0.08 --delta 0.22 --bound-mode lemma-full");
    tci::FeasibilityRange wide = tci::feasibility_bounds(loaded, 0.08, tci::BoundMode::full);
    CHECK(full["feasibility"]["delta_min"].get<double>() == wide.delta_min);
    CHECK(wide.delta_min > narrow.delta_min); // the linear term binds here

    CHECK(run_cli("reinsurance-solve --delta 0.5").exit_code == 3);
}

TEST_CASE("penalisation matches the library comparison and its bounds") {
    json doc = run_json("penalisation --P 0.01");
    expect_schema("penalisation.schema.json", doc);

    tci::ReinsuranceModel model{2.0, 0.22, 0.05, 0.3, 0.35, 1.0};
    const double b_hat = 0.2 / std::sqrt(model.lambda * model.mu2);
    tci::PenalisationResult expected =
        tci::penalisation_compare(model, tci::drift_of(model, b_hat), 0.01, 0.2);
    CHECK(doc["b_hat"].get<double>() == expected.b_hat);
    CHECK(doc["M_prime"].get<double>() == expected.M_prime);
    CHECK(doc["p_constant"].get<double>() == expected.constant.probability);
    CHECK(doc["p_descending"].get<double>() == expected.descending.probability);
    CHECK(doc["p_ascending"].get<double>() == expected.ascending.probability);
    CHECK(doc["p_descending"].get<double>() > doc["p_constant"].get<double>());
    CHECK(doc["p_constant"].get<double>() > doc["p_ascending"].get<double>());

    CHECK(run_cli("penalisation --delta 0.35").exit_code == 3); // retention above 1
    CHECK(run_cli("penalisation --P 0.2").exit_code == 3);      // beyond P_max
    CHECK(run_cli("penalisation --P -0.1").exit_code == 2);
}

TEST_CASE("three-period scores explicit and default triples") {
    const std::string triple_args =
        "three-period --b0 0.9 --b1 0.8685322822809030 --b2 0.6600391462905255";
    json doc = run_json(triple_args);
    expect_schema("three-period.schema.json", doc);

    tci::ReinsuranceModel model{1.0, 0.15, 0.06, 0.2, 0.35, 1.0};
    tci::TargetDist target{0.02, 0.2, 1.0};
    tci::SurvivalReport expected = tci::three_period_survival(
        model, target, {0.9, 0.8685322822809030, 0.6600391462905255});
    CHECK(doc["survival"].get<double>() == expected.probability);
    CHECK_FALSE(doc["quadrature_fallback"].get<bool>());

    json best = run_json("three-period --samples 240");
    CHECK(best["triple"]["b1"].get<double>() >= best["triple"]["b2"].get<double>());
    for (const auto& other :
         tci::three_period_circle(model, target, 240)) {
        CHECK(best["triple"]["b0"].get<double>() >= other.b0);
    }

    CHECK(run_cli("three-period --b0 0.9").exit_code == 2);
    CHECK(run_cli("three-period --b0 0.5 --b1 0.5 --b2 0.5").exit_code == 2);
}

TEST_CASE("--out writes the same bytes that stdout would carry") {
    const std::string path = "/tmp/tci_cli_out_" + std::to_string(getpid()) + ".csv";
    RunResult to_stdout = run_cli("survival-table --etas 0.25");
    RunResult to_file = run_cli("survival-table --etas 0.25 --out " + shell_quote(path));
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    std::ifstream file(path);
    std::stringstream ss;
    ss << file.rdbuf();
    CHECK(ss.str() == to_stdout.out);
    std::remove(path.c_str());
}

TEST_CASE("config files supply defaults and flags override them") {
    const std::string path = "/tmp/tci_cli_conf_" + std::to_string(getpid()) + ".ini";
    {
        std::ofstream conf(path);
        conf << "format=json\n[survival-table]\netas=0.27\n";
    }
    RunResult from_conf = run_cli("--config " + shell_quote(path) + " survival-table");
    REQUIRE(from_conf.exit_code == 0);
    json doc = json::parse(from_conf.out); // format=json came from the file
    REQUIRE(doc["parameters"]["etas"].size() == 1);
    CHECK(doc["parameters"]["etas"][0].get<double>() == 0.27);

    RunResult overridden =
        run_cli("--config " + shell_quote(path) + " survival-table --etas 0.29");
    json doc2 = json::parse(overridden.out);
    CHECK(doc2["parameters"]["etas"][0].get<double>() == 0.29);
    std::remove(path.c_str());
}

TEST_CASE("the example config drives every subcommand") {
    const std::string conf = env_or_die("TCI_SCHEMAS") + "/tci.conf.example";
    for (const std::string cmd : {"dividend-plan", "survival-table", "var-es",
                                  "reinsurance-solve", "penalisation", "three-period"}) {
        RunResult res = run_cli("--config " + shell_quote(conf) + " " + cmd);
        CHECK_MESSAGE(res.exit_code == 0, cmd, ": ", res.err);
    }
    RunResult fig = run_cli("--config " + shell_quote(conf) + " figures");
    CHECK(fig.exit_code == 0); // figure id supplied by the file
}
