#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace recf {

// A real function sampled on m equispaced nodes of [lower, upper], endpoints
// included: node i sits at lower + i (upper - lower) / (m - 1). This node
// convention is fixed project-wide. Between nodes the function is read as
// piecewise linear.
class GridFunction {
public:
    GridFunction(double lower, double upper, std::vector<double> values);

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }

    double node(std::size_t i) const;
    double value_at(double x) const; // linear interpolation between nodes

    static GridFunction sample(double lower, double upper, std::size_t m,
                               const std::function<double(double)>& f);

private:
    double lower_;
    double upper_;
    std::vector<double> values_;
};

// A strictly increasing weight distribution on [lower, upper] with total mass
// one, held as a CDF / inverse-CDF evaluator pair. Construction probes both
// evaluators and rejects pairs that fail Lambda(lower) = 0, Lambda(upper) = 1
// or the roundtrip Lambda^{-1}(Lambda(x)) = x within 1e-9.
class WeightCdf {
public:
    WeightCdf(double lower, double upper,
              std::function<double(double)> cdf,
              std::function<double(double)> inverse);

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    double operator()(double x) const;  // Lambda(x), clamped to [0, 1]
    double inverse(double u) const;     // Lambda^{-1}(u), clamped to [lower, upper]

    static WeightCdf uniform(double lower, double upper);
    // Standard normal CDF restricted to [lower, upper] and renormalized.
    static WeightCdf std_normal_restricted(double lower, double upper);

private:
    double lower_;
    double upper_;
    std::function<double(double)> cdf_;
    std::function<double(double)> inverse_;
};

// Increasing rearrangement of the sampled values: the same multiset of values
// reordered nondecreasingly over the nodes.
GridFunction rearrange(const GridFunction& f);

// Quantile-definition evaluation of the rearrangement at one point:
//   f*(x) = inf { y among sampled values : #{i : v_i <= y} / m >= xbar },
// with xbar = (x - lower) / (upper - lower). Independent counting oracle for
// rearrange; agrees with it exactly at every node.
double rearrange_by_definition(const GridFunction& f, double x);

// Rearrangement with respect to a weight distribution Lambda:
//   (f o Lambda^{-1}) rearranged on an equispaced u-mesh of [0, 1], mapped
// back through Lambda onto the original mesh. Uniform weight reproduces
// rearrange.
GridFunction weighted_rearrange(const GridFunction& f, const WeightCdf& w);

// One pairwise exchange: requires l < m and values[l] > values[m], returns a
// copy with the two entries swapped. Building block of the absolute-error
// reduction argument behind rearrange.
std::vector<double> sorting_step(std::vector<double> values, std::size_t l, std::size_t m);

// Minimal pairwise sorting gain
//   eta_p = inf |v - t'|^p + |v' - t|^p - |v - t|^p - |v' - t'|^p
// over v, v', t, t' in [k_lo, k_hi] with v' >= v + epsilon, t' >= t + epsilon.
// Grid search refined by shrinking local grids; p = 2 has closed form
// 2 epsilon^2. p = 1 is admitted as a diagnostic (the infimum is 0).
double eta_p(double p, double epsilon, double k_lo, double k_hi);

} // namespace recf
