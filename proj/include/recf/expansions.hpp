#pragma once

#include "recf/distributions.hpp"

namespace recf {

// Cumulants, sample size and truncation order of a series approximation.
struct ExpansionSpec {
    Cumulants cumulants;
    int sample_size;
    int order; // J in {1, 2, 3}

    ExpansionSpec(Cumulants c, int n, int j); // validates n >= 1, j in {1,2,3}
};

// Quantile-side correction polynomial R_j evaluated at z:
//   R_1(z) = z
//   R_2(z) = skew (z^2 - 1) / 6
//   R_3(z) = (3 exkurt (z^3 - 3z) - 2 skew^2 (2z^3 - 5z)) / 72
double cf_polynomial(int j, double z, const Cumulants& c);

// Distribution-side correction term P_j evaluated at x:
//   P_1(x) = Phi(x)
//   P_2(x) = -skew (x^2 - 1) phi(x) / 6
//   P_3(x) = -(3 exkurt (x^3 - 3x) + skew^2 (x^5 - 10x^3 + 15x)) phi(x) / 72
double edgeworth_polynomial(int j, double x, const Cumulants& c);

// Truncated distribution-function approximation
//   sum_{j=1..J} P_j(x) / n^{(j-1)/2}.
// Deliberately left unclipped: values may leave [0, 1] and the curve may be
// non-monotone. Rearrangement is the only repair step in this project.
double edgeworth_cdf(const ExpansionSpec& spec, double x);

// Truncated quantile-function approximation
//   sum_{j=1..J} R_j(Phi^{-1}(u)) / n^{(j-1)/2},  0 < u < 1.
// May be non-monotone in u; see edgeworth_cdf on the absence of repair.
double cornish_fisher_quantile(const ExpansionSpec& spec, double u);

} // namespace recf
