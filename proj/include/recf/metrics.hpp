#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "recf/distributions.hpp"
#include "recf/expansions.hpp"
#include "recf/rearrangement.hpp"

namespace recf {

// Evaluation window for error measurement. distribution_domain intervals are
// finite [lo, hi]; quantile_domain intervals must satisfy 0 < lo < hi < 1.
struct EvalInterval {
    enum class Kind { distribution_domain, quantile_domain };

    Kind kind;
    double lower;
    double upper;

    EvalInterval(Kind k, double lo, double hi); // validates bounds per kind
};

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

// Norm orders reported in every error table.
inline const std::vector<double> kNormOrders = {1.0, 2.0, 3.0, 4.0, kInfNorm};

// L_p distance between two grid functions on the same mesh, taken w.r.t. the
// uniform probability measure on [lower, upper] (equivalently: the plain L_p
// norm after affinely remapping the interval to [0, 1]). Trapezoid quadrature
// for finite p; max over nodes for p = infinity.
double lp_error(const GridFunction& fhat, const GridFunction& f0, double p);

// L_p distance w.r.t. the weight measure dLambda: change of variables onto an
// equispaced u-mesh of [0, 1], trapezoid in u. Uniform weight reproduces
// lp_error.
double weighted_lp_error(const GridFunction& fhat, const GridFunction& f0,
                         const WeightCdf& w, double p);

// Truth oracle plus the order-1 and order-3 approximation curves and the
// rearranged order-3 curve, all sampled on one mesh. `truth` is left empty by
// the cumulant-only builders; the *_with_truth builders fill it from the
// closed-form oracle.
struct ApproximationCurves {
    std::vector<double> grid;
    std::vector<double> truth;
    std::vector<double> first_order;
    std::vector<double> third_order;
    std::vector<double> rearranged_third_order;
};

ApproximationCurves cdf_curves(const Cumulants& c, int n, const EvalInterval& iv, int mesh);
ApproximationCurves quantile_curves(const Cumulants& c, int n, const EvalInterval& iv, int mesh);
ApproximationCurves cdf_curves_with_truth(const SampleMeanModel& model,
                                          const EvalInterval& iv, int mesh);
ApproximationCurves quantile_curves_with_truth(const SampleMeanModel& model,
                                               const EvalInterval& iv, int mesh);

struct ErrorRow {
    int sample_size;
    double p; // kInfNorm for the sup norm row
    double first_order_error;
    double third_order_error;
    double rearranged_third_order_error;
    double ratio; // rearranged / third_order
};

struct ErrorReport {
    std::vector<ErrorRow> rows;
};

struct ImprovementReport {
    ErrorReport cdf;
    ErrorReport quantile;
};

enum class WeightKind { none, uniform, normal };

// Error tables for each sample size and each p in kNormOrders, on both the
// distribution and the quantile domain. Table cells sample the curves at the
// `mesh` midpoints of the interval and take equal-weight discrete norms, so
// the rearranged column (sorted samples) contracts the error exactly, not
// just up to quadrature error. With a weight kind other than none, curves are
// resampled at Lambda^{-1} of the u-midpoints and errors are taken under
// dLambda, so the rearranged column uses the weighted rearrangement.
// Requires a Gamma population (closed-form truth).
ImprovementReport improvement_report(const Population& pop,
                                     const std::vector<int>& sample_sizes,
                                     const EvalInterval& cdf_interval,
                                     const EvalInterval& q_interval,
                                     int mesh,
                                     WeightKind weight = WeightKind::none);

struct CouplingResult {
    double raw_moment;
    double rearranged_moment;
    double std_error; // Monte Carlo standard error of raw_moment
};

// Coupling experiment: simulate X ~ standardized sample mean, set U = F_n(X)
// and compare the restricted moments E[1{U in [lo,hi]} |X - Qhat(U)|^p]^{1/p}
// for the raw quantile approximation against its rearrangement. p in {1, 2}.
CouplingResult coupling_mc(const SampleMeanModel& model, const ExpansionSpec& spec,
                           double p, long draws, std::uint64_t seed,
                           const EvalInterval& u_interval);

// Same computation on a pre-simulated sample, so several (order, p) cells can
// share one simulation.
CouplingResult coupling_moments(const std::vector<double>& sims,
                                const SampleMeanModel& model,
                                const ExpansionSpec& spec, double p,
                                const EvalInterval& u_interval);

} // namespace recf
