#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "recf/distributions.hpp"
#include "recf/metrics.hpp"

namespace recf {

// Effective settings of one experiment run. Field defaults are the project
// defaults; a config file overrides them and command-line flags override the
// file.
struct ExperimentConfig {
    std::string population = "gamma:0.0625:16";
    std::vector<int> sample_sizes = {4, 8, 16, 32};
    std::vector<int> orders = {1, 3};
    double cdf_lower = -3.0;
    double cdf_upper = 3.0;
    double q_lower = 0.01;
    double q_upper = 0.99;
    int mesh = 1001;
    std::string weight; // "", "uniform" or "normal"
    long draws = 1000000;
    std::uint64_t seed = 20070814;
    std::string out_dir = "out";

    bool operator==(const ExperimentConfig&) const = default;
};

// "gamma:SHAPE:SCALE" or "lognormal:MU:SIGMA" -> population (config_error on
// anything else, including non-positive shape/scale/sigma).
Population parse_population(const std::string& text);

// "LO:HI" with LO < HI.
void parse_interval(const std::string& text, double& lo, double& hi);

std::vector<int> parse_int_list(const std::string& text);

// Flat "key = value" lines; '#' starts a comment; blank lines ignored. Keys
// match the CLI flag names. Unknown keys and malformed values raise
// config_error. Parsing starts from `base` and overrides the keys present.
ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base = {});
ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base = {});

// Canonical key = value rendering of the effective config. Doubles are
// serialized with enough digits that parse(serialize(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

// FNV-1a over serialize_config, recorded in output file headers.
std::uint64_t config_hash(const ExperimentConfig& config);

// Cross-field validation (intervals ordered and in-domain, mesh >= 2, draws
// and sample sizes positive, orders within {1,2,3}, known weight).
void validate_config(const ExperimentConfig& config);

EvalInterval cdf_interval(const ExperimentConfig& config);
EvalInterval quantile_interval(const ExperimentConfig& config);
WeightKind weight_kind(const ExperimentConfig& config);

} // namespace recf
