#include "recf/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <variant>

#include "recf/csv.hpp"
#include "recf/errors.hpp"
#include "recf/metrics.hpp"

namespace recf {

namespace {

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw io_error("cannot create output directory '" + dir + "': " + ec.message());
}

// Every output file carries the tool name, the config hash and the full
// effective config, so a result can always be traced back to its inputs.
std::vector<std::string> file_comments(const ExperimentConfig& config, const char* subcommand) {
    std::vector<std::string> comments;
    comments.push_back(std::string("recf ") + subcommand);
    char hash[32];
    std::snprintf(hash, sizeof(hash), "config-hash %016llx",
                  static_cast<unsigned long long>(config_hash(config)));
    comments.push_back(hash);
    const std::string text = serialize_config(config);
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t pos = text.find('\n', start);
        comments.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return comments;
}

void write_table(const ExperimentConfig& config, const std::string& name, const CsvTable& table) {
    write_file_atomic(std::filesystem::path(config.out_dir) / name, to_csv_text(table));
}

void write_curves(const ExperimentConfig& config, const std::string& name,
                  const char* abscissa, const ApproximationCurves& curves) {
    CsvTable t;
    t.comments = file_comments(config, "curves");
    t.header = {abscissa, "truth", "first_order", "third_order", "rearranged_third_order"};
    for (std::size_t i = 0; i < curves.grid.size(); ++i)
        t.rows.push_back({format_double(curves.grid[i]),
                          format_double(curves.truth[i]),
                          format_double(curves.first_order[i]),
                          format_double(curves.third_order[i]),
                          format_double(curves.rearranged_third_order[i])});
    write_table(config, name, t);
}

void write_errors(const ExperimentConfig& config, const std::string& name,
                  const ErrorReport& report) {
    CsvTable t;
    t.comments = file_comments(config, "table");
    t.header = {"n", "p", "first_order", "third_order", "rearranged_third_order", "ratio"};
    for (const ErrorRow& row : report.rows)
        t.rows.push_back({std::to_string(row.sample_size),
                          format_double(row.p),
                          format_double(row.first_order_error),
                          format_double(row.third_order_error),
                          format_double(row.rearranged_third_order_error),
                          format_double(row.ratio)});
    write_table(config, name, t);
}

const GammaPopulation* as_gamma(const Population& pop) {
    return std::get_if<GammaPopulation>(&pop);
}

} // namespace

void cmd_curves(const ExperimentConfig& config) {
    const Population pop = parse_population(config.population);
    const bool has_oracle = as_gamma(pop) != nullptr;
    ensure_out_dir(config.out_dir);
    const EvalInterval civ = cdf_interval(config);
    const EvalInterval qiv = quantile_interval(config);
    for (int n : config.sample_sizes) {
        const SampleMeanModel model(pop, n);
        ApproximationCurves cdf;
        if (has_oracle) {
            cdf = cdf_curves_with_truth(model, civ, config.mesh);
        } else {
            cdf = cdf_curves(population_cumulants(pop), n, civ, config.mesh);
            cdf.truth.reserve(cdf.grid.size());
            for (const Probability& u : mc_cdf(model, cdf.grid, config.draws, config.seed))
                cdf.truth.push_back(u.value());
        }
        write_curves(config, "cdf_curves_n" + std::to_string(n) + ".csv", "x", cdf);
        if (has_oracle) {
            const ApproximationCurves q = quantile_curves_with_truth(model, qiv, config.mesh);
            write_curves(config, "quantile_curves_n" + std::to_string(n) + ".csv", "u", q);
        }
    }
}

void cmd_table(const ExperimentConfig& config) {
    const Population pop = parse_population(config.population);
    if (!as_gamma(pop))
        throw std::domain_error("error tables need a Gamma population (closed-form truth)");
    ensure_out_dir(config.out_dir);
    const ImprovementReport report =
        improvement_report(pop, config.sample_sizes, cdf_interval(config),
                           quantile_interval(config), config.mesh, weight_kind(config));
    write_errors(config, "cdf_errors.csv", report.cdf);
    write_errors(config, "quantile_errors.csv", report.quantile);
}

void cmd_coupling(const ExperimentConfig& config) {
    const Population pop = parse_population(config.population);
    if (!as_gamma(pop))
        throw std::domain_error("the coupling experiment needs a Gamma population (closed-form truth)");
    ensure_out_dir(config.out_dir);
    const EvalInterval qiv = quantile_interval(config);
    const Cumulants c = population_cumulants(pop);
    CsvTable t;
    t.comments = file_comments(config, "coupling");
    t.header = {"n", "order", "p", "raw_moment", "rearranged_moment", "std_error"};
    for (int n : config.sample_sizes) {
        const SampleMeanModel model(pop, n);
        const std::vector<double> sims =
            simulate_standardized_means(model, config.draws, config.seed);
        for (int order : config.orders) {
            const ExpansionSpec spec(c, n, order);
            for (double p : {1.0, 2.0}) {
                const CouplingResult r = coupling_moments(sims, model, spec, p, qiv);
                t.rows.push_back({std::to_string(n), std::to_string(order), format_double(p),
                                  format_double(r.raw_moment),
                                  format_double(r.rearranged_moment),
                                  format_double(r.std_error)});
            }
        }
    }
    write_table(config, "coupling.csv", t);
}

} // namespace recf
