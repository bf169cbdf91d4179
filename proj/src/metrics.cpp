#include "recf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recf {

EvalInterval::EvalInterval(Kind k, double lo, double hi)
    : kind(k), lower(lo), upper(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::domain_error("EvalInterval: need finite lower < upper");
    if (k == Kind::quantile_domain && !(lo > 0.0 && hi < 1.0))
        throw std::domain_error("EvalInterval: quantile interval must lie strictly inside (0, 1)");
}

namespace {

double pow_abs(double d, double p) {
    d = std::fabs(d);
    if (p == 1.0) return d;
    if (p == 2.0) return d * d;
    if (p == 3.0) return d * d * d;
    if (p == 4.0) {
        const double s = d * d;
        return s * s;
    }
    return std::pow(d, p);
}

void check_norm_order(double p) {
    if (std::isinf(p) && p > 0.0) return;
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::domain_error("lp_error: p must be >= 1 or infinity");
}

// Norm of a residual vector sampled on an equispaced mesh, w.r.t. the uniform
// probability measure on the underlying interval (trapezoid weights on the
// unit remap). p = inf takes the max over nodes.
double mesh_norm(const std::vector<double>& residual, double p) {
    const std::size_t m = residual.size();
    if (std::isinf(p)) {
        double mx = 0.0;
        for (double d : residual) mx = std::max(mx, std::fabs(d));
        return mx;
    }
    const double h = 1.0 / static_cast<double>(m - 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double w = (i == 0 || i == m - 1) ? 0.5 * h : h;
        sum += w * pow_abs(residual[i], p);
    }
    return std::pow(sum, 1.0 / p);
}

std::vector<double> mesh_points(double lo, double hi, int m) {
    std::vector<double> xs(static_cast<std::size_t>(m));
    const double step = (hi - lo) / static_cast<double>(m - 1);
    for (int i = 0; i < m; ++i)
        xs[static_cast<std::size_t>(i)] = (i == m - 1) ? hi : lo + i * step;
    return xs;
}

// Error tables use midpoint sampling with equal weights instead of the node
// mesh with trapezoid weights. Midpoint quadrature is second-order accurate
// like trapezoid, but equal weights make sorting an exact contraction of the
// discrete norm (rearrangement inequality against the monotone truth vector).
// Trapezoid's half-weight endpoints break that guarantee by O(h) whenever the
// monotonicity defect touches the interval boundary, which it does for the
// default quantile window at n = 32.
double midpoint_norm(const std::vector<double>& residual, double p) {
    const std::size_t m = residual.size();
    if (std::isinf(p)) {
        double mx = 0.0;
        for (double d : residual) mx = std::max(mx, std::fabs(d));
        return mx;
    }
    double sum = 0.0;
    for (double d : residual) sum += pow_abs(d, p);
    return std::pow(sum / static_cast<double>(m), 1.0 / p);
}

std::vector<double> midpoints(double lo, double hi, int m) {
    std::vector<double> xs(static_cast<std::size_t>(m));
    const double step = (hi - lo) / static_cast<double>(m);
    for (int i = 0; i < m; ++i)
        xs[static_cast<std::size_t>(i)] = lo + (i + 0.5) * step;
    return xs;
}

void check_mesh(int m) {
    if (m < 2)
        throw std::domain_error("mesh must have at least two nodes");
}

} // namespace

double lp_error(const GridFunction& fhat, const GridFunction& f0, double p) {
    check_norm_order(p);
    if (fhat.size() != f0.size() || fhat.lower() != f0.lower() || fhat.upper() != f0.upper())
        throw std::invalid_argument("lp_error: curves must share one mesh");
    std::vector<double> residual(fhat.size());
    for (std::size_t i = 0; i < fhat.size(); ++i)
        residual[i] = fhat.values()[i] - f0.values()[i];
    return mesh_norm(residual, p);
}

double weighted_lp_error(const GridFunction& fhat, const GridFunction& f0,
                         const WeightCdf& w, double p) {
    check_norm_order(p);
    if (fhat.size() != f0.size() || fhat.lower() != f0.lower() || fhat.upper() != f0.upper())
        throw std::invalid_argument("weighted_lp_error: curves must share one mesh");
    if (w.lower() != fhat.lower() || w.upper() != fhat.upper())
        throw std::invalid_argument("weighted_lp_error: weight domain must match the curves");

    const std::size_t m = fhat.size();
    std::vector<double> residual(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(m - 1);
        const double x = w.inverse(u);
        residual[i] = fhat.value_at(x) - f0.value_at(x);
    }
    return mesh_norm(residual, p);
}

namespace {

ApproximationCurves curves_impl(const Cumulants& c, int n, const EvalInterval& iv,
                                int mesh, bool quantile_domain) {
    check_mesh(mesh);
    ApproximationCurves out;
    out.grid = mesh_points(iv.lower, iv.upper, mesh);

    const ExpansionSpec first(c, n, 1);
    const ExpansionSpec third(c, n, 3);
    out.first_order.reserve(out.grid.size());
    out.third_order.reserve(out.grid.size());
    for (double g : out.grid) {
        if (quantile_domain) {
            out.first_order.push_back(cornish_fisher_quantile(first, g));
            out.third_order.push_back(cornish_fisher_quantile(third, g));
        } else {
            out.first_order.push_back(edgeworth_cdf(first, g));
            out.third_order.push_back(edgeworth_cdf(third, g));
        }
    }
    out.rearranged_third_order = out.third_order;
    std::sort(out.rearranged_third_order.begin(), out.rearranged_third_order.end());
    return out;
}

} // namespace

ApproximationCurves cdf_curves(const Cumulants& c, int n, const EvalInterval& iv, int mesh) {
    if (iv.kind != EvalInterval::Kind::distribution_domain)
        throw std::invalid_argument("cdf_curves: interval must be a distribution-domain interval");
    return curves_impl(c, n, iv, mesh, false);
}

ApproximationCurves quantile_curves(const Cumulants& c, int n, const EvalInterval& iv, int mesh) {
    if (iv.kind != EvalInterval::Kind::quantile_domain)
        throw std::invalid_argument("quantile_curves: interval must be a quantile-domain interval");
    return curves_impl(c, n, iv, mesh, true);
}

ApproximationCurves cdf_curves_with_truth(const SampleMeanModel& model,
                                          const EvalInterval& iv, int mesh) {
    ApproximationCurves out = cdf_curves(population_cumulants(model.population),
                                         model.sample_size, iv, mesh);
    out.truth.reserve(out.grid.size());
    for (double x : out.grid)
        out.truth.push_back(true_cdf(model, x));
    return out;
}

ApproximationCurves quantile_curves_with_truth(const SampleMeanModel& model,
                                               const EvalInterval& iv, int mesh) {
    ApproximationCurves out = quantile_curves(population_cumulants(model.population),
                                              model.sample_size, iv, mesh);
    out.truth.reserve(out.grid.size());
    for (double u : out.grid)
        out.truth.push_back(true_quantile(model, u));
    return out;
}

namespace {

double ratio_of(double rearranged, double original) {
    if (original == 0.0) return 1.0; // both curves coincide with the truth
    return rearranged / original;
}

std::vector<ErrorRow> domain_rows(const std::vector<double>& truth,
                                  const std::vector<double>& first,
                                  const std::vector<double>& third,
                                  const std::vector<double>& rearranged,
                                  int n) {
    const std::size_t m = truth.size();
    std::vector<double> r1(m), r3(m), rr(m);
    for (std::size_t i = 0; i < m; ++i) {
        r1[i] = first[i] - truth[i];
        r3[i] = third[i] - truth[i];
        rr[i] = rearranged[i] - truth[i];
    }
    std::vector<ErrorRow> rows;
    rows.reserve(kNormOrders.size());
    for (double p : kNormOrders) {
        ErrorRow row;
        row.sample_size = n;
        row.p = p;
        row.first_order_error = midpoint_norm(r1, p);
        row.third_order_error = midpoint_norm(r3, p);
        row.rearranged_third_order_error = midpoint_norm(rr, p);
        row.ratio = ratio_of(row.rearranged_third_order_error, row.third_order_error);
        rows.push_back(row);
    }
    return rows;
}

WeightCdf make_weight(WeightKind kind, double lo, double hi) {
    if (kind == WeightKind::normal) return WeightCdf::std_normal_restricted(lo, hi);
    return WeightCdf::uniform(lo, hi);
}

// One table block: truth, order-1 and order-3 curves sampled at the given
// abscissas, rearranged column = sorted order-3 samples, equal-weight norms.
std::vector<ErrorRow> sampled_rows(const SampleMeanModel& model, const Cumulants& c,
                                   int n, const std::vector<double>& xs,
                                   bool quantile_domain) {
    const ExpansionSpec first(c, n, 1);
    const ExpansionSpec third(c, n, 3);
    const std::size_t m = xs.size();
    std::vector<double> truth(m), f1(m), f3(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = xs[i];
        if (quantile_domain) {
            truth[i] = true_quantile(model, x);
            f1[i] = cornish_fisher_quantile(first, x);
            f3[i] = cornish_fisher_quantile(third, x);
        } else {
            truth[i] = true_cdf(model, x);
            f1[i] = edgeworth_cdf(first, x);
            f3[i] = edgeworth_cdf(third, x);
        }
    }
    std::vector<double> rearranged = f3;
    std::sort(rearranged.begin(), rearranged.end());
    return domain_rows(truth, f1, f3, rearranged, n);
}

// Weighted rows work on the u-domain: curves are evaluated at Lambda^{-1}(u_i)
// for u-midpoints of [0, 1], so the equal-weight norms in u integrate against
// dLambda. This is the change of variables weighted_rearrange performs,
// without stacking two interpolation passes on top of each other. The uniform
// weight lands exactly on the unweighted abscissas.
std::vector<ErrorRow> weighted_domain_rows(const SampleMeanModel& model,
                                           const Cumulants& c, int n,
                                           const EvalInterval& iv, int mesh,
                                           WeightKind kind, bool quantile_domain) {
    const WeightCdf w = make_weight(kind, iv.lower, iv.upper);
    std::vector<double> xs(static_cast<std::size_t>(mesh));
    for (int i = 0; i < mesh; ++i)
        xs[static_cast<std::size_t>(i)] =
            w.inverse((i + 0.5) / static_cast<double>(mesh));
    return sampled_rows(model, c, n, xs, quantile_domain);
}

} // namespace

ImprovementReport improvement_report(const Population& pop,
                                     const std::vector<int>& sample_sizes,
                                     const EvalInterval& cdf_interval,
                                     const EvalInterval& q_interval,
                                     int mesh, WeightKind weight) {
    if (cdf_interval.kind != EvalInterval::Kind::distribution_domain)
        throw std::invalid_argument("improvement_report: cdf_interval has the wrong kind");
    if (q_interval.kind != EvalInterval::Kind::quantile_domain)
        throw std::invalid_argument("improvement_report: q_interval has the wrong kind");
    if (sample_sizes.empty())
        throw std::invalid_argument("improvement_report: need at least one sample size");
    check_mesh(mesh);

    ImprovementReport report;
    const Cumulants c = population_cumulants(pop);
    for (int n : sample_sizes) {
        const SampleMeanModel model(pop, n);

        std::vector<ErrorRow> cdf_rows, q_rows;
        if (weight == WeightKind::none) {
            cdf_rows = sampled_rows(model, c, n,
                                    midpoints(cdf_interval.lower, cdf_interval.upper, mesh),
                                    false);
            q_rows = sampled_rows(model, c, n,
                                  midpoints(q_interval.lower, q_interval.upper, mesh),
                                  true);
        } else {
            cdf_rows = weighted_domain_rows(model, c, n, cdf_interval, mesh, weight, false);
            q_rows = weighted_domain_rows(model, c, n, q_interval, mesh, weight, true);
        }
        report.cdf.rows.insert(report.cdf.rows.end(), cdf_rows.begin(), cdf_rows.end());
        report.quantile.rows.insert(report.quantile.rows.end(), q_rows.begin(), q_rows.end());
    }
    return report;
}

CouplingResult coupling_moments(const std::vector<double>& sims,
                                const SampleMeanModel& model,
                                const ExpansionSpec& spec, double p,
                                const EvalInterval& u_interval) {
    if (p != 1.0 && p != 2.0)
        throw std::domain_error("coupling moments are defined for p in {1, 2}");
    if (u_interval.kind != EvalInterval::Kind::quantile_domain)
        throw std::invalid_argument("coupling moments need a quantile-domain interval");
    if (sims.empty())
        throw std::invalid_argument("coupling moments need a nonempty simulation");

    const int mesh = 1001;
    const GridFunction qhat = GridFunction::sample(
        u_interval.lower, u_interval.upper, mesh,
        [&](double u) { return cornish_fisher_quantile(spec, u); });
    const GridFunction qstar = rearrange(qhat);

    double sum_raw = 0.0, sum_raw_sq = 0.0, sum_rear = 0.0;
    for (double x : sims) {
        const double u = true_cdf(model, x);
        if (u < u_interval.lower || u > u_interval.upper) continue;
        const double raw = pow_abs(x - cornish_fisher_quantile(spec, u), p);
        const double rear = pow_abs(x - qstar.value_at(u), p);
        sum_raw += raw;
        sum_raw_sq += raw * raw;
        sum_rear += rear;
    }
    const double total = static_cast<double>(sims.size());
    const double mean_raw = sum_raw / total;
    const double mean_rear = sum_rear / total;
    const double var_raw = std::max(0.0, sum_raw_sq / total - mean_raw * mean_raw);
    const double se_mean = std::sqrt(var_raw / total);

    CouplingResult out;
    out.raw_moment = std::pow(mean_raw, 1.0 / p);
    out.rearranged_moment = std::pow(mean_rear, 1.0 / p);
    // Delta method through the 1/p root of the estimated mean.
    out.std_error = (p == 1.0 || mean_raw == 0.0)
                        ? se_mean
                        : se_mean * (1.0 / p) * std::pow(mean_raw, (1.0 - p) / p);
    return out;
}

CouplingResult coupling_mc(const SampleMeanModel& model, const ExpansionSpec& spec,
                           double p, long draws, std::uint64_t seed,
                           const EvalInterval& u_interval) {
    const std::vector<double> sims = simulate_standardized_means(model, draws, seed);
    return coupling_moments(sims, model, spec, p, u_interval);
}

} // namespace recf
