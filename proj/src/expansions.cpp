#include "recf/expansions.hpp"

#include <cmath>
#include <stdexcept>

namespace recf {

ExpansionSpec::ExpansionSpec(Cumulants c, int n, int j)
    : cumulants(c), sample_size(n), order(j) {
    if (n < 1)
        throw std::domain_error("ExpansionSpec: sample size must be >= 1");
    if (j < 1 || j > 3)
        throw std::domain_error("ExpansionSpec: order must be 1, 2 or 3");
}

double cf_polynomial(int j, double z, const Cumulants& c) {
    if (!std::isfinite(z))
        throw std::domain_error("cf_polynomial: argument must be finite");
    switch (j) {
    case 1:
        return z;
    case 2:
        return c.skewness * (z * z - 1.0) / 6.0;
    case 3: {
        const double z3 = z * z * z;
        return (3.0 * c.excess_kurtosis * (z3 - 3.0 * z) -
                2.0 * c.skewness * c.skewness * (2.0 * z3 - 5.0 * z)) / 72.0;
    }
    default:
        throw std::domain_error("cf_polynomial: order must be 1, 2 or 3");
    }
}

double edgeworth_polynomial(int j, double x, const Cumulants& c) {
    if (!std::isfinite(x))
        throw std::domain_error("edgeworth_polynomial: argument must be finite");
    switch (j) {
    case 1:
        return std_normal_cdf(x);
    case 2:
        return -c.skewness * (x * x - 1.0) * std_normal_pdf(x) / 6.0;
    case 3: {
        const double x2 = x * x;
        const double x3 = x2 * x;
        const double x5 = x3 * x2;
        return -(3.0 * c.excess_kurtosis * (x3 - 3.0 * x) +
                 c.skewness * c.skewness * (x5 - 10.0 * x3 + 15.0 * x)) *
               std_normal_pdf(x) / 72.0;
    }
    default:
        throw std::domain_error("edgeworth_polynomial: order must be 1, 2 or 3");
    }
}

namespace {

// n^{(j-1)/2} for j in {1, 2, 3}: 1, sqrt(n), n. Written out so that the
// j = 3 term is divided by n exactly (not by fl(sqrt(n))^2).
double order_divisor(int j, int n) {
    switch (j) {
    case 1: return 1.0;
    case 2: return std::sqrt(static_cast<double>(n));
    default: return static_cast<double>(n);
    }
}

} // namespace

double edgeworth_cdf(const ExpansionSpec& spec, double x) {
    double sum = 0.0;
    for (int j = 1; j <= spec.order; ++j)
        sum += edgeworth_polynomial(j, x, spec.cumulants) / order_divisor(j, spec.sample_size);
    return sum;
}

double cornish_fisher_quantile(const ExpansionSpec& spec, double u) {
    if (!(u > 0.0 && u < 1.0))
        throw std::domain_error("cornish_fisher_quantile: argument must lie strictly inside (0, 1)");
    const double z = std_normal_quantile(u);
    double sum = 0.0;
    for (int j = 1; j <= spec.order; ++j)
        sum += cf_polynomial(j, z, spec.cumulants) / order_divisor(j, spec.sample_size);
    return sum;
}

} // namespace recf
