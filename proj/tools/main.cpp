#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recf/commands.hpp"
#include "recf/config.hpp"
#include "recf/errors.hpp"

// Exit codes: 0 success, 2 configuration problem, 3 numeric domain problem,
// 4 output I/O problem.

int main(int argc, char** argv) {
    CLI::App app{"Series approximations to the distribution and quantile "
                 "function of a standardized sample mean, with monotone "
                 "rearrangement and error reports against the exact law"};
    app.require_subcommand(1);

    std::string config_path;
    std::string population, weight, out_dir, cdf_iv, q_iv;
    std::vector<int> sample_sizes, orders;
    int mesh = 0;
    long draws = 0;
    unsigned long long seed = 0;

    app.add_option("--config", config_path, "flat key = value config file");
    auto* opt_population =
        app.add_option("--population", population, "gamma:SHAPE:SCALE or lognormal:MU:SIGMA");
    auto* opt_n = app.add_option("--n", sample_sizes, "sample sizes (comma separated)")
                      ->delimiter(',');
    auto* opt_order = app.add_option("--order", orders, "expansion orders in {1,2,3}")
                          ->delimiter(',');
    auto* opt_cdf_iv =
        app.add_option("--cdf-interval", cdf_iv, "LO:HI evaluation window on the x axis");
    auto* opt_q_iv =
        app.add_option("--q-interval", q_iv, "LO:HI evaluation window inside (0,1)");
    auto* opt_mesh = app.add_option("--mesh", mesh, "grid nodes per curve (>= 2)");
    auto* opt_weight = app.add_option("--weight", weight, "error weight: uniform or normal");
    auto* opt_draws = app.add_option("--draws", draws, "Monte Carlo draws");
    auto* opt_seed = app.add_option("--seed", seed, "RNG seed");
    auto* opt_out = app.add_option("--out", out_dir, "output directory");

    auto* curves = app.add_subcommand(
        "curves", "write per-n truth and approximation curves (cdf_curves_n*.csv, "
                  "quantile_curves_n*.csv)");
    auto* table = app.add_subcommand(
        "table", "write L_p error tables (cdf_errors.csv, quantile_errors.csv)");
    auto* coupling = app.add_subcommand(
        "coupling", "write coupled quantile moment comparisons (coupling.csv)");
    curves->fallthrough();
    table->fallthrough();
    coupling->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        recf::ExperimentConfig config;
        if (!config_path.empty())
            config = recf::load_config_file(config_path, config);
        if (opt_population->count()) config.population = population;
        if (opt_n->count()) config.sample_sizes = sample_sizes;
        if (opt_order->count()) config.orders = orders;
        if (opt_cdf_iv->count()) recf::parse_interval(cdf_iv, config.cdf_lower, config.cdf_upper);
        if (opt_q_iv->count()) recf::parse_interval(q_iv, config.q_lower, config.q_upper);
        if (opt_mesh->count()) config.mesh = mesh;
        if (opt_weight->count()) config.weight = weight;
        if (opt_draws->count()) config.draws = draws;
        if (opt_seed->count()) config.seed = seed;
        if (opt_out->count()) config.out_dir = out_dir;
        recf::validate_config(config);

        if (curves->parsed())
            recf::cmd_curves(config);
        else if (table->parsed())
            recf::cmd_table(config);
        else if (coupling->parsed())
            recf::cmd_coupling(config);
        return 0;
    } catch (const recf::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const recf::io_error& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 4;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
