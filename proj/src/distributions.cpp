#include "recf/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "recf/rng.hpp"

namespace recf {

Cumulants::Cumulants(double skew, double excess_kurt)
    : skewness(skew), excess_kurtosis(excess_kurt) {
    if (!std::isfinite(skew) || !std::isfinite(excess_kurt))
        throw std::domain_error("Cumulants: values must be finite");
    // Moment feasibility: kurtosis - 3 >= skewness^2 - 2 for any distribution.
    if (excess_kurt < skew * skew - 2.0)
        throw std::domain_error("Cumulants: excess kurtosis below skewness^2 - 2 is infeasible");
}

SampleMeanModel::SampleMeanModel(Population pop, int n)
    : population(std::move(pop)), sample_size(n) {
    if (n < 1)
        throw std::domain_error("SampleMeanModel: sample size must be >= 1");
    if (const auto* g = std::get_if<GammaPopulation>(&population)) {
        if (!(g->shape > 0.0) || !(g->scale > 0.0) ||
            !std::isfinite(g->shape) || !std::isfinite(g->scale))
            throw std::domain_error("SampleMeanModel: gamma shape and scale must be positive");
    } else {
        const auto& ln = std::get<LogNormalPopulation>(population);
        if (!(ln.sigma > 0.0) || !std::isfinite(ln.sigma) || !std::isfinite(ln.mu))
            throw std::domain_error("SampleMeanModel: lognormal sigma must be positive");
    }
}

Cumulants gamma_cumulants(double shape) {
    if (!(shape > 0.0) || !std::isfinite(shape))
        throw std::domain_error("gamma_cumulants: shape must be positive");
    return Cumulants(2.0 / std::sqrt(shape), 6.0 / shape);
}

Cumulants lognormal_cumulants(double mu, double sigma) {
    (void)mu; // location shifts neither standardized cumulant
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::domain_error("lognormal_cumulants: sigma must be positive");
    const double w = std::exp(sigma * sigma);
    const double skew = (w + 2.0) * std::sqrt(w - 1.0);
    const double exkurt = ((w + 2.0) * w + 3.0) * w * w - 6.0; // w^4 + 2w^3 + 3w^2 - 6
    return Cumulants(skew, exkurt);
}

Cumulants population_cumulants(const Population& pop) {
    if (const auto* g = std::get_if<GammaPopulation>(&pop))
        return gamma_cumulants(g->shape);
    const auto& ln = std::get<LogNormalPopulation>(pop);
    return lognormal_cumulants(ln.mu, ln.sigma);
}

double population_mean(const Population& pop) {
    if (const auto* g = std::get_if<GammaPopulation>(&pop))
        return g->shape * g->scale;
    const auto& ln = std::get<LogNormalPopulation>(pop);
    return std::exp(ln.mu + 0.5 * ln.sigma * ln.sigma);
}

double population_sd(const Population& pop) {
    if (const auto* g = std::get_if<GammaPopulation>(&pop))
        return std::sqrt(g->shape) * g->scale;
    const auto& ln = std::get<LogNormalPopulation>(pop);
    const double w = std::exp(ln.sigma * ln.sigma);
    return population_mean(pop) * std::sqrt(w - 1.0);
}

namespace {

const GammaPopulation& require_gamma(const SampleMeanModel& model, const char* op) {
    const auto* g = std::get_if<GammaPopulation>(&model.population);
    if (!g)
        throw std::domain_error(std::string(op) +
            ": no closed-form oracle for lognormal populations; use mc_cdf");
    return *g;
}

} // namespace

// Sum of n iid Gamma(k, theta) is Gamma(nk, theta), so with a = nk the
// standardized mean satisfies F_n(x) = P(a, a + x sqrt(a)); the scale cancels.
Probability true_cdf(const SampleMeanModel& model, double x) {
    if (!std::isfinite(x))
        throw std::domain_error("true_cdf: argument must be finite");
    const auto& g = require_gamma(model, "true_cdf");
    const double a = model.sample_size * g.shape;
    const double sqrt_a = std::sqrt(a);
    if (x <= -sqrt_a) return Probability(0.0);
    return regularized_gamma_p(a, a + x * sqrt_a);
}

double true_quantile(const SampleMeanModel& model, double u) {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("true_quantile: argument must lie strictly inside (0, 1)");
    const auto& g = require_gamma(model, "true_quantile");
    const double a = model.sample_size * g.shape;
    const double sqrt_a = std::sqrt(a);
    return (inverse_regularized_gamma_p(a, u) - a) / sqrt_a;
}

std::vector<double> simulate_standardized_means(const SampleMeanModel& model,
                                                long draws, std::uint64_t seed) {
    if (draws < 1)
        throw std::invalid_argument("simulate_standardized_means: draws must be >= 1");
    const int n = model.sample_size;
    const double mean = population_mean(model.population);
    const double denom = std::sqrt(static_cast<double>(n)) * population_sd(model.population);

    Xoshiro256PlusPlus rng(seed);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(draws));

    if (const auto* g = std::get_if<GammaPopulation>(&model.population)) {
        const double shape = g->shape;
        const double scale = g->scale;
        for (long d = 0; d < draws; ++d) {
            double sum = 0.0;
            for (int i = 0; i < n; ++i)
                sum += scale * inverse_regularized_gamma_p(shape, rng.next_uniform());
            out.push_back((sum - n * mean) / denom);
        }
    } else {
        const auto& ln = std::get<LogNormalPopulation>(model.population);
        for (long d = 0; d < draws; ++d) {
            double sum = 0.0;
            for (int i = 0; i < n; ++i)
                sum += std::exp(ln.mu + ln.sigma * std_normal_quantile(rng.next_uniform()));
            out.push_back((sum - n * mean) / denom);
        }
    }
    return out;
}

std::vector<Probability> mc_cdf(const SampleMeanModel& model,
                                const std::vector<double>& grid,
                                long draws, std::uint64_t seed) {
    if (grid.empty())
        throw std::domain_error("mc_cdf: grid must be nonempty");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("mc_cdf: grid must be ascending");
    if (draws < 1)
        throw std::invalid_argument("mc_cdf: draws must be >= 1");

    std::vector<double> sims = simulate_standardized_means(model, draws, seed);
    std::sort(sims.begin(), sims.end());

    std::vector<Probability> out;
    out.reserve(grid.size());
    const double total = static_cast<double>(draws);
    for (double x : grid) {
        const auto count = std::upper_bound(sims.begin(), sims.end(), x) - sims.begin();
        out.push_back(Probability(static_cast<double>(count) / total));
    }
    return out;
}

} // namespace recf
