// mupart: enumerate, sample and analyze integer partitions with parts
// restricted to an arithmetic set, test graphicality, and evaluate the
// associated limit-law numerics.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "mupart/errors.hpp"
#include "mupart/version.hpp"

namespace {

using mupart::cli::ExperimentConfig;

struct RangeFlags {
    std::int64_t from = 0;
    std::int64_t to = -1;
    std::int64_t step = 1;
    bool used() const { return to >= from && to >= 0; }
};

void add_common(CLI::App* cmd, ExperimentConfig& config) {
    cmd->add_option("--mu", config.Mu,
                    "restriction: identity | linear:<m> | binary | smooth_cutoff")
        ->capture_default_str();
    cmd->add_option("--lower-bound", config.lower_bound, "drop parts below this bound")
        ->capture_default_str();
    cmd->add_option("--out", config.out_format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", config.output_path, "write the report to this file");
    cmd->add_option("--threads", config.threads,
                    "worker threads (0: MUPART_THREADS env or hardware)");
}

void add_n_list(CLI::App* cmd, ExperimentConfig& config, RangeFlags& range) {
    cmd->add_option("--n", config.n_values, "n value(s)");
    cmd->add_option("--n-from", range.from, "range start");
    cmd->add_option("--n-to", range.to, "range end (inclusive)");
    cmd->add_option("--step", range.step, "range step")->capture_default_str();
}

void resolve_range(ExperimentConfig& config, const RangeFlags& range) {
    if (range.used()) {
        auto expanded = mupart::cli::expand_range(range.from, range.to, range.step);
        config.n_values.insert(config.n_values.end(), expanded.begin(), expanded.end());
    }
}

int dispatch(const ExperimentConfig& config) {
    if (!config.output_path.empty()) {
        std::ofstream file(config.output_path);
        if (!file) {
            std::cerr << "cannot open output file: " << config.output_path << "\n";
            return mupart::cli::kExitConfig;
        }
        return mupart::cli::run_command(config, file);
    }
    return mupart::cli::run_command(config, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted integer partitions: exact census, Boltzmann sampling, "
                 "graphicality, and limit-law numerics"};
    app.set_version_flag("--version", std::string("mupart ") + mupart::kVersion);
    app.require_subcommand(1);

    ExperimentConfig config;
    RangeFlags range;
    std::string rejected_log_base;

    auto* count = app.add_subcommand("count", "count restricted partitions (CSV rows n,count)");
    add_common(count, config);
    add_n_list(count, config, range);
    count->callback([&] { config.command = "count"; });

    auto* enumerate =
        app.add_subcommand("enumerate", "list the partitions of one n, one per line");
    add_common(enumerate, config);
    enumerate->add_option("--n", config.n_values, "target n")->required();
    enumerate->callback([&] { config.command = "enumerate"; });

    auto* fraction =
        app.add_subcommand("fraction", "exact graphical fraction over even n values");
    add_common(fraction, config);
    add_n_list(fraction, config, range);
    fraction->callback([&] { config.command = "fraction"; });

    auto* sample = app.add_subcommand(
        "sample", "histogram of a partition statistic under conditioned Boltzmann sampling");
    add_common(sample, config);
    sample->add_option("--n", config.n_values, "target n")->required();
    sample->add_option("--stat", config.stat, "statistic: X1 | X:<k> | Yk:<k> | muY:<k> | R:<k>")
        ->capture_default_str();
    sample->add_option("--samples", config.samples, "accepted samples")->capture_default_str();
    sample->add_option("--seed", config.seed, "RNG seed")->required();
    sample->add_option("--window", config.window, "conditioning window delta in [0,1)")
        ->capture_default_str();
    sample->add_option("--max-tries", config.max_tries, "attempt budget per accepted sample")
        ->capture_default_str();
    sample->add_flag("--allow-large-exact", config.allow_large_exact,
                     "permit exact conditioning beyond n = 200");
    sample->callback([&] { config.command = "sample"; });

    auto* asym = app.add_subcommand("asymptotics", "limit-law numerics");
    asym->require_subcommand(1);
    asym->add_option("--log-base", rejected_log_base,
                     "rejected: the natural logarithm is fixed throughout");

    auto* asym_q = asym->add_subcommand("q", "solve the expected-size equation for q");
    add_common(asym_q, config);
    add_n_list(asym_q, config, range);
    asym_q->callback([&] { config.command = "asymptotics-q"; });

    auto* asym_eta = asym->add_subcommand("eta", "evaluate eta on a grid");
    add_common(asym_eta, config);
    asym_eta->add_option("--alpha", config.alpha, "saddle parameter")->required();
    asym_eta->add_option("--from", config.grid_from, "grid start")->capture_default_str();
    asym_eta->add_option("--to", config.grid_to, "grid end")->capture_default_str();
    asym_eta->add_option("--points", config.grid_points, "grid size")->capture_default_str();
    asym_eta->callback([&] { config.command = "asymptotics-eta"; });

    auto* asym_cdf = asym->add_subcommand("cdf", "order-k Gumbel CDF on a grid");
    add_common(asym_cdf, config);
    asym_cdf->add_option("--k", config.k, "order")->capture_default_str();
    asym_cdf->add_option("--from", config.grid_from, "grid start")->capture_default_str();
    asym_cdf->add_option("--to", config.grid_to, "grid end")->capture_default_str();
    asym_cdf->add_option("--points", config.grid_points, "grid size")->capture_default_str();
    asym_cdf->callback([&] { config.command = "asymptotics-cdf"; });

    auto* asym_ratio =
        asym->add_subcommand("ratio", "graphical-fraction moment ratio per n");
    add_common(asym_ratio, config);
    add_n_list(asym_ratio, config, range);
    asym_ratio->callback([&] { config.command = "asymptotics-ratio"; });

    auto* asym_lb = asym->add_subcommand("lower-bound", "critical lower bound l_n");
    add_common(asym_lb, config);
    add_n_list(asym_lb, config, range);
    asym_lb->callback([&] { config.command = "asymptotics-lower-bound"; });

    auto* asym_rd = asym->add_subcommand("rank-density", "rank limit density on a grid");
    add_common(asym_rd, config);
    asym_rd->add_option("--k", config.k, "order")->capture_default_str();
    asym_rd->add_option("--alpha", config.alpha, "saddle parameter")->required();
    asym_rd->add_option("--from", config.grid_from, "grid start")->capture_default_str();
    asym_rd->add_option("--to", config.grid_to, "grid end")->capture_default_str();
    asym_rd->add_option("--points", config.grid_points, "grid size")->capture_default_str();
    asym_rd->callback([&] { config.command = "asymptotics-rank-density"; });

    auto* lower = app.add_subcommand(
        "lower-bound", "critical lower bound sweep (closed-form comparator for binary)");
    add_common(lower, config);
    add_n_list(lower, config, range);
    lower->callback([&] { config.command = "lower-bound"; });

    auto* verify = app.add_subcommand("verify", "experiment harnesses with verdicts");
    verify->require_subcommand(1);

    auto* th1 = verify->add_subcommand(
        "theorem1", "total variation between the laws of X_k and mu(Y_k) across n");
    add_common(th1, config);
    add_n_list(th1, config, range);
    th1->add_option("--k", config.k, "statistic order")->capture_default_str();
    th1->add_option("--samples", config.samples, "accepted samples per n")
        ->capture_default_str();
    th1->add_option("--seed", config.seed, "RNG seed (sampled mode)");
    th1->add_option("--window", config.window, "conditioning window delta")
        ->capture_default_str();
    th1->add_option("--max-tries", config.max_tries, "attempt budget per accepted sample")
        ->capture_default_str();
    th1->add_flag("--exact", config.exact, "exact laws by full enumeration (n <= 60)");
    th1->add_flag("--allow-large-exact", config.allow_large_exact,
                  "permit exact conditioning beyond n = 200");
    th1->callback([&] { config.command = "verify-theorem1"; });

    auto* th3 = verify->add_subcommand(
        "theorem3", "stability of fraction*sqrt(n) over an even range");
    add_common(th3, config);
    add_n_list(th3, config, range);
    th3->add_option("--slack", config.slack, "allowed max/min ratio")->capture_default_str();
    th3->callback([&] { config.command = "verify-theorem3"; });

    auto* nw = verify->add_subcommand(
        "nash-williams", "rank criterion against Erdos-Gallai and the exhaustive realizer");
    add_common(nw, config);
    nw->add_option("--limit", config.limit, "criterion-equivalence ceiling (even n)")
        ->capture_default_str();
    nw->add_option("--brute-limit", config.brute_limit, "exhaustive-realizer ceiling")
        ->capture_default_str();
    nw->callback([&] { config.command = "verify-nash-williams"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : mupart::cli::kExitConfig;
    }

    if (!rejected_log_base.empty()) {
        std::cerr << "--log-base is not configurable: the natural logarithm is fixed\n";
        return mupart::cli::kExitConfig;
    }
    if (th1->parsed() && !config.exact && th1->count("--seed") == 0) {
        std::cerr << "a seed is required for sampled runs\n";
        return mupart::cli::kExitConfig;
    }

    try {
        resolve_range(config, range);
        return dispatch(config);
    } catch (const mupart::RejectionFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mupart::cli::kExitNumeric;
    } catch (const mupart::IntegrationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mupart::cli::kExitNumeric;
    } catch (const mupart::SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mupart::cli::kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return mupart::cli::kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return mupart::cli::kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mupart::cli::kExitNumeric;
    }
}
