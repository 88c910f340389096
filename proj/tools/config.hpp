#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mupart::cli {

// Fully resolved configuration of one CLI invocation.  Every report embeds
// its JSON form so runs are reproducible from the output alone.
struct ExperimentConfig {
    std::string command;

    std::string Mu = "identity";
    double lower_bound = 0.0;

    std::vector<std::int64_t> n_values;
    std::int64_t k = 1;

    std::string stat = "X1";
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 0;
    double window = 0.0;
    std::uint64_t max_tries = 2'000'000;
    bool exact = false;
    bool allow_large_exact = false;

    double alpha = 0.0;
    double grid_from = -6.0;
    double grid_to = 6.0;
    std::int64_t grid_points = 25;

    double slack = 2.0;
    std::int64_t limit = 40;       // nash-williams enumeration ceiling
    std::int64_t brute_limit = 16; // nash-williams realizer ceiling

    std::string out_format = "csv";
    std::string output_path;
    int threads = 0;  // 0: MUPART_THREADS env or hardware default

    bool operator==(const ExperimentConfig&) const = default;
};

nlohmann::json to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

// Expands --n / --n-from/--n-to/--step into the resolved n list.
std::vector<std::int64_t> expand_range(std::int64_t from, std::int64_t to, std::int64_t step);

}  // namespace mupart::cli
