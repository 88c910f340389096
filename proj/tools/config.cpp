#include "config.hpp"

#include <stdexcept>

namespace mupart::cli {

nlohmann::json to_json(const ExperimentConfig& c) {
    return nlohmann::json{{"command", c.command},
                          {"mu", c.Mu},
                          {"lower_bound", c.lower_bound},
                          {"n_values", c.n_values},
                          {"k", c.k},
                          {"stat", c.stat},
                          {"samples", c.samples},
                          {"seed", c.seed},
                          {"window", c.window},
                          {"max_tries", c.max_tries},
                          {"exact", c.exact},
                          {"allow_large_exact", c.allow_large_exact},
                          {"alpha", c.alpha},
                          {"grid_from", c.grid_from},
                          {"grid_to", c.grid_to},
                          {"grid_points", c.grid_points},
                          {"slack", c.slack},
                          {"limit", c.limit},
                          {"brute_limit", c.brute_limit},
                          {"out_format", c.out_format},
                          {"output_path", c.output_path},
                          {"threads", c.threads}};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.command = j.at("command").get<std::string>();
    c.Mu = j.at("mu").get<std::string>();
    c.lower_bound = j.at("lower_bound").get<double>();
    c.n_values = j.at("n_values").get<std::vector<std::int64_t>>();
    c.k = j.at("k").get<std::int64_t>();
    c.stat = j.at("stat").get<std::string>();
    c.samples = j.at("samples").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.window = j.at("window").get<double>();
    c.max_tries = j.at("max_tries").get<std::uint64_t>();
    c.exact = j.at("exact").get<bool>();
    c.allow_large_exact = j.at("allow_large_exact").get<bool>();
    c.alpha = j.at("alpha").get<double>();
    c.grid_from = j.at("grid_from").get<double>();
    c.grid_to = j.at("grid_to").get<double>();
    c.grid_points = j.at("grid_points").get<std::int64_t>();
    c.slack = j.at("slack").get<double>();
    c.limit = j.at("limit").get<std::int64_t>();
    c.brute_limit = j.at("brute_limit").get<std::int64_t>();
    c.out_format = j.at("out_format").get<std::string>();
    c.output_path = j.at("output_path").get<std::string>();
    c.threads = j.at("threads").get<int>();
    return c;
}

std::vector<std::int64_t> expand_range(std::int64_t from, std::int64_t to, std::int64_t step) {
    if (step < 1) throw std::invalid_argument("range step must be >= 1");
    if (to < from) throw std::invalid_argument("empty n range");
    std::vector<std::int64_t> out;
    for (std::int64_t n = from; n <= to; n += step) out.push_back(n);
    return out;
}

}  // namespace mupart::cli
