#include "commands.hpp"

#include <stdexcept>

namespace tci::cli {

Json ModelFlags::params() const {
    Json p = Json::object();
    p["lambda"] = lambda;
    p["mu"] = mu;
    p["mu2"] = mu2;
    p["eta"] = eta;
    p["theta"] = theta;
    p["T"] = T;
    return p;
}

void add_model_options(CLI::App* cmd, ModelFlags& flags) {
    cmd->add_option("--lambda", flags.lambda, "claim arrival intensity")->capture_default_str();
    cmd->add_option("--mu", flags.mu, "mean claim size")->capture_default_str();
    cmd->add_option("--mu2", flags.mu2, "second moment of the claim size")->capture_default_str();
    cmd->add_option("--eta", flags.eta, "insurer safety loading")->capture_default_str();
    cmd->add_option("--theta", flags.theta, "reinsurer safety loading")->capture_default_str();
    cmd->add_option("--T", flags.T, "horizon")->capture_default_str();
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        std::string token = text.substr(pos, comma - pos);
        pos = comma + 1;
        size_t begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) {
            continue; // empty token, e.g. the sole token of ""
        }
        size_t end = token.find_last_not_of(" \t");
        token = token.substr(begin, end - begin + 1);
        size_t consumed = 0;
        double value = std::stod(token, &consumed);
        if (consumed != token.size()) {
            throw std::invalid_argument("not a number in list: '" + token + "'");
        }
        values.push_back(value);
    }
    return values;
}

SurvivalAlgo algo_from_name(const std::string& name) {
    if (name == "direct") {
        return SurvivalAlgo::direct;
    }
    if (name == "decomposition") {
        return SurvivalAlgo::decomposition;
    }
    if (name == "mc") {
        return SurvivalAlgo::mc;
    }
    throw std::invalid_argument("unknown algorithm: " + name);
}

SurvivalOptions survival_options(const GlobalOpts& global, long paths) {
    SurvivalOptions opts;
    opts.paths = paths;
    opts.seed = global.seed;
    return opts;
}

} // namespace tci::cli
