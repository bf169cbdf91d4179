#pragma once

#include "recf/config.hpp"

namespace recf {

// Emit per-n curve files: cdf_curves_n{N}.csv for every population (lognormal
// truth comes from mc_cdf) and quantile_curves_n{N}.csv for Gamma populations.
void cmd_curves(const ExperimentConfig& config);

// Emit cdf_errors.csv and quantile_errors.csv (Gamma populations only).
void cmd_table(const ExperimentConfig& config);

// Emit coupling.csv with one row per (n, order, p in {1,2}).
void cmd_coupling(const ExperimentConfig& config);

} // namespace recf
