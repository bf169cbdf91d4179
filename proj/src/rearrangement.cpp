#include "recf/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "recf/special_functions.hpp"

namespace recf {

namespace {

void check_finite_values(const std::vector<double>& values, const char* who) {
    for (double v : values)
        if (!std::isfinite(v))
            throw std::domain_error(std::string(who) + ": values must be finite");
}

} // namespace

GridFunction::GridFunction(double lower, double upper, std::vector<double> values)
    : lower_(lower), upper_(upper), values_(std::move(values)) {
    if (!std::isfinite(lower_) || !std::isfinite(upper_) || !(lower_ < upper_))
        throw std::domain_error("GridFunction: interval must be finite with lower < upper");
    if (values_.size() < 2)
        throw std::domain_error("GridFunction: need at least two nodes");
    check_finite_values(values_, "GridFunction");
}

double GridFunction::node(std::size_t i) const {
    if (i >= values_.size())
        throw std::invalid_argument("GridFunction::node: index out of range");
    if (i == values_.size() - 1) return upper_;
    const double step = (upper_ - lower_) / static_cast<double>(values_.size() - 1);
    return lower_ + static_cast<double>(i) * step;
}

double GridFunction::value_at(double x) const {
    const double span = upper_ - lower_;
    const double slack = 1e-12 * span;
    if (!(x >= lower_ - slack && x <= upper_ + slack))
        throw std::domain_error("GridFunction::value_at: argument outside the domain");
    x = std::min(std::max(x, lower_), upper_);

    const std::size_t m = values_.size();
    const double step = span / static_cast<double>(m - 1);
    std::size_t i = static_cast<std::size_t>((x - lower_) / step);
    if (i >= m - 1) i = m - 2;
    const double x_i = lower_ + static_cast<double>(i) * step;
    double t = (x - x_i) / step;
    t = std::min(std::max(t, 0.0), 1.0);
    return values_[i] + t * (values_[i + 1] - values_[i]);
}

GridFunction GridFunction::sample(double lower, double upper, std::size_t m,
                                  const std::function<double(double)>& f) {
    if (m < 2)
        throw std::domain_error("GridFunction::sample: need at least two nodes");
    std::vector<double> values(m);
    const double step = (upper - lower) / static_cast<double>(m - 1);
    for (std::size_t i = 0; i < m; ++i)
        values[i] = f(i == m - 1 ? upper : lower + static_cast<double>(i) * step);
    return GridFunction(lower, upper, std::move(values));
}

WeightCdf::WeightCdf(double lower, double upper,
                     std::function<double(double)> cdf,
                     std::function<double(double)> inverse)
    : lower_(lower), upper_(upper), cdf_(std::move(cdf)), inverse_(std::move(inverse)) {
    if (!std::isfinite(lower_) || !std::isfinite(upper_) || !(lower_ < upper_))
        throw std::domain_error("WeightCdf: interval must be finite with lower < upper");
    if (std::fabs(cdf_(lower_)) > 1e-9 || std::fabs(cdf_(upper_) - 1.0) > 1e-9)
        throw std::domain_error("WeightCdf: CDF must run from 0 at lower to 1 at upper");
    // Probe strict monotonicity and the inverse roundtrip on a small grid.
    const int probes = 33;
    double prev = cdf_(lower_);
    for (int i = 1; i <= probes; ++i) {
        const double x = lower_ + (upper_ - lower_) * static_cast<double>(i) / probes;
        const double cur = cdf_(x);
        if (!(cur > prev))
            throw std::domain_error("WeightCdf: CDF must be strictly increasing");
        if (std::fabs(inverse_(cur) - x) > 1e-9 * std::max(1.0, std::fabs(x)))
            throw std::domain_error("WeightCdf: inverse does not invert the CDF");
        prev = cur;
    }
}

double WeightCdf::operator()(double x) const {
    const double u = cdf_(x);
    return std::min(std::max(u, 0.0), 1.0);
}

double WeightCdf::inverse(double u) const {
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("WeightCdf::inverse: argument must lie in [0, 1]");
    const double x = inverse_(u);
    return std::min(std::max(x, lower_), upper_);
}

WeightCdf WeightCdf::uniform(double lower, double upper) {
    const double span = upper - lower;
    return WeightCdf(
        lower, upper,
        [lower, span](double x) { return (x - lower) / span; },
        [lower, span](double u) { return lower + u * span; });
}

WeightCdf WeightCdf::std_normal_restricted(double lower, double upper) {
    const double flo = std_normal_cdf(lower);
    const double fhi = std_normal_cdf(upper);
    const double mass = fhi - flo;
    return WeightCdf(
        lower, upper,
        [flo, mass](double x) { return (static_cast<double>(std_normal_cdf(x)) - flo) / mass; },
        [flo, mass](double u) { return std_normal_quantile(flo + u * mass); });
}

GridFunction rearrange(const GridFunction& f) {
    std::vector<double> sorted = f.values();
    std::sort(sorted.begin(), sorted.end());
    return GridFunction(f.lower(), f.upper(), std::move(sorted));
}

double rearrange_by_definition(const GridFunction& f, double x) {
    if (!(x >= f.lower() && x <= f.upper()))
        throw std::domain_error("rearrange_by_definition: argument outside the domain");
    const double xbar = (x - f.lower()) / (f.upper() - f.lower());

    std::vector<double> sorted = f.values();
    std::sort(sorted.begin(), sorted.end());
    if (xbar <= 0.0) return sorted.front();

    const double m = static_cast<double>(sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const double y = sorted[k];
        // #{i : v_i <= y}, counted over the whole sample (ties included).
        const auto count = std::upper_bound(sorted.begin(), sorted.end(), y) - sorted.begin();
        if (static_cast<double>(count) >= xbar * m) return y;
    }
    return sorted.back();
}

GridFunction weighted_rearrange(const GridFunction& f, const WeightCdf& w) {
    if (w.lower() != f.lower() || w.upper() != f.upper())
        throw std::invalid_argument("weighted_rearrange: weight and function domains differ");
    const std::size_t m = f.size();

    // Resample f o Lambda^{-1} on an equispaced u-mesh of [0, 1] and sort.
    std::vector<double> g(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(m - 1);
        g[i] = f.value_at(w.inverse(u));
    }
    std::sort(g.begin(), g.end());
    GridFunction sorted_u(0.0, 1.0, std::move(g));

    // Map back through Lambda onto the original mesh.
    std::vector<double> out(m);
    for (std::size_t i = 0; i < m; ++i)
        out[i] = sorted_u.value_at(w(f.node(i)));
    return GridFunction(f.lower(), f.upper(), std::move(out));
}

std::vector<double> sorting_step(std::vector<double> values, std::size_t l, std::size_t m) {
    if (l >= values.size() || m >= values.size())
        throw std::invalid_argument("sorting_step: index out of range");
    if (!(l < m))
        throw std::invalid_argument("sorting_step: need l < m");
    if (!(values[l] > values[m]))
        throw std::invalid_argument("sorting_step: entries are not inverted");
    std::swap(values[l], values[m]);
    return values;
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

double eta_objective(double p, double v, double vp, double t, double tp) {
    return pow_abs(v - tp, p) + pow_abs(vp - t, p) -
           pow_abs(v - t, p) - pow_abs(vp - tp, p);
}

} // namespace

double eta_p(double p, double epsilon, double k_lo, double k_hi) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::domain_error("eta_p: p must be finite and >= 1");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw std::domain_error("eta_p: epsilon must be positive");
    if (!std::isfinite(k_lo) || !std::isfinite(k_hi) || !(k_hi - k_lo >= epsilon))
        throw std::domain_error("eta_p: box [k_lo, k_hi] cannot fit the epsilon separation");

    // Coordinates: base points v, t and gaps dv, dt >= epsilon. Start from a
    // coarse grid over the whole box, then shrink the grid around the best
    // point found.
    const int pts = 11;
    const double span = k_hi - k_lo;

    double best = std::numeric_limits<double>::infinity();
    double bv = k_lo, bdv = epsilon, bt = k_lo, bdt = epsilon;

    double v_lo = k_lo, v_hi = k_hi - epsilon;
    double dv_lo = epsilon, dv_hi = span;
    double t_lo = k_lo, t_hi = k_hi - epsilon;
    double dt_lo = epsilon, dt_hi = span;

    for (int round = 0; round < 8; ++round) {
        for (int iv = 0; iv < pts; ++iv) {
            const double v = v_lo + (v_hi - v_lo) * iv / (pts - 1);
            for (int idv = 0; idv < pts; ++idv) {
                double dv = dv_lo + (dv_hi - dv_lo) * idv / (pts - 1);
                dv = std::max(dv, epsilon);
                if (v + dv > k_hi) continue;
                for (int it = 0; it < pts; ++it) {
                    const double t = t_lo + (t_hi - t_lo) * it / (pts - 1);
                    for (int idt = 0; idt < pts; ++idt) {
                        double dt = dt_lo + (dt_hi - dt_lo) * idt / (pts - 1);
                        dt = std::max(dt, epsilon);
                        if (t + dt > k_hi) continue;
                        const double val = eta_objective(p, v, v + dv, t, t + dt);
                        if (val < best) {
                            best = val;
                            bv = v; bdv = dv; bt = t; bdt = dt;
                        }
                    }
                }
            }
        }
        // Shrink each coordinate range around the incumbent.
        const double shrink = 0.35;
        const double vw = (v_hi - v_lo) * shrink;
        const double dvw = (dv_hi - dv_lo) * shrink;
        const double tw = (t_hi - t_lo) * shrink;
        const double dtw = (dt_hi - dt_lo) * shrink;
        v_lo = std::max(k_lo, bv - vw); v_hi = std::min(k_hi - epsilon, bv + vw);
        dv_lo = std::max(epsilon, bdv - dvw); dv_hi = std::min(span, bdv + dvw);
        t_lo = std::max(k_lo, bt - tw); t_hi = std::min(k_hi - epsilon, bt + tw);
        dt_lo = std::max(epsilon, bdt - dtw); dt_hi = std::min(span, bdt + dtw);
    }
    return std::max(best, 0.0);
}

} // namespace recf
