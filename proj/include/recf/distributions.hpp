#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "recf/special_functions.hpp"

namespace recf {

// Standardized third cumulant (skewness) and fourth cumulant (excess
// kurtosis) of a population. Kurtosis is excess throughout: 0 for the normal.
struct Cumulants {
    double skewness = 0.0;
    double excess_kurtosis = 0.0;

    Cumulants() = default;
    Cumulants(double skew, double excess_kurt); // enforces excess_kurt >= skew^2 - 2
};

struct GammaPopulation {
    double shape;
    double scale;
};

struct LogNormalPopulation {
    double mu;
    double sigma;
};

using Population = std::variant<GammaPopulation, LogNormalPopulation>;

// A population plus the sample size n of the mean statistic under study.
struct SampleMeanModel {
    Population population;
    int sample_size;

    SampleMeanModel(Population pop, int n); // validates parameters
};

Cumulants gamma_cumulants(double shape);
Cumulants lognormal_cumulants(double mu, double sigma);
Cumulants population_cumulants(const Population& pop);

double population_mean(const Population& pop);
double population_sd(const Population& pop);

// Distribution function of the standardized sample mean
// Z_n = (sum Y_i - n E[Y]) / (sqrt(n) sd(Y)).
// Closed form exists for Gamma populations only; lognormal input throws
// (use mc_cdf for a simulated truth curve instead).
Probability true_cdf(const SampleMeanModel& model, double x);

// Quantile function of the standardized sample mean (Gamma populations only).
double true_quantile(const SampleMeanModel& model, double u);

// `draws` independent standardized sample means, each from n inverse-CDF
// population draws. Deterministic in (seed, draws).
std::vector<double> simulate_standardized_means(const SampleMeanModel& model,
                                                long draws, std::uint64_t seed);

// Empirical CDF of the standardized sample mean on an ascending grid.
std::vector<Probability> mc_cdf(const SampleMeanModel& model,
                                const std::vector<double>& grid,
                                long draws, std::uint64_t seed);

} // namespace recf
