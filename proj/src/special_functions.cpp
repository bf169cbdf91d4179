#include "recf/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace recf {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779; // 1 / sqrt(2 pi)
constexpr double kSqrt1_2 = 0.7071067811865475244;    // 1 / sqrt(2)
constexpr double kEps = std::numeric_limits<double>::epsilon();

[[noreturn]] void domain_fail(const std::string& what) {
    throw std::domain_error(what);
}

} // namespace

Probability::Probability(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0))
        domain_fail("Probability: value must lie in [0, 1]");
}

// Lanczos approximation, g = 7, 9 coefficients. Relative accuracy on
// log Gamma is a few 1e-15 over the positive axis, comfortably below the
// 1e-13 the callers rely on.
double log_gamma(double x) {
    static const double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (!(x > 0.0) || !std::isfinite(x))
        domain_fail("log_gamma: argument must be finite and positive");
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double acc = c[0];
    for (int i = 1; i < 9; ++i) acc += c[i] / (z + i);
    const double t = z + 7.5; // g + 1/2
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

Probability std_normal_cdf(double x) {
    if (!std::isfinite(x))
        domain_fail("std_normal_cdf: argument must be finite");
    const double v = 0.5 * std::erfc(-x * kSqrt1_2);
    return Probability(v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v));
}

double std_normal_pdf(double x) {
    if (!std::isfinite(x))
        domain_fail("std_normal_pdf: argument must be finite");
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double std_normal_quantile(double u) {
    if (!(u > 0.0 && u < 1.0))
        domain_fail("std_normal_quantile: argument must lie strictly inside (0, 1)");

    // Acklam's rational minimax approximation (relative error < 1.2e-9).
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double cc[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00, 2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;

    double x;
    if (u < p_low) {
        const double q = std::sqrt(-2.0 * std::log(u));
        x = (((((cc[0] * q + cc[1]) * q + cc[2]) * q + cc[3]) * q + cc[4]) * q + cc[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (u <= 1.0 - p_low) {
        const double q = u - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - u));
        x = -(((((cc[0] * q + cc[1]) * q + cc[2]) * q + cc[3]) * q + cc[4]) * q + cc[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // One Newton step against the CDF takes the error to a few ulp.
    const double dens = std_normal_pdf(x);
    if (dens > 0.0) {
        const double err = static_cast<double>(std_normal_cdf(x)) - u;
        x -= err / dens;
    }
    return x;
}

namespace {

// Series representation of P(a, x), valid and fast for x < a + 1.
double gamma_p_series(double a, double x, double gln) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int it = 0; it < 10000; ++it) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps)
            return sum * std::exp(-x + a * std::log(x) - gln);
    }
    domain_fail("regularized_gamma_p: series failed to converge");
}

// Continued fraction for Q(a, x) = 1 - P(a, x) via modified Lentz, for
// x >= a + 1.
double gamma_q_contfrac(double a, double x, double gln) {
    const double fpmin = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double dd = 1.0 / b;
    double h = dd;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        dd = an * dd + b;
        if (std::fabs(dd) < fpmin) dd = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        dd = 1.0 / dd;
        const double del = dd * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps)
            return std::exp(-x + a * std::log(x) - gln) * h;
    }
    domain_fail("regularized_gamma_p: continued fraction failed to converge");
}

} // namespace

Probability regularized_gamma_p(double a, double x) {
    if (!(a > 0.0) || !std::isfinite(a))
        domain_fail("regularized_gamma_p: shape must be finite and positive");
    if (!(x >= 0.0) || !std::isfinite(x))
        domain_fail("regularized_gamma_p: argument must be finite and nonnegative");
    if (x == 0.0) return Probability(0.0);

    const double gln = log_gamma(a);
    double p;
    if (x < a + 1.0)
        p = gamma_p_series(a, x, gln);
    else
        p = 1.0 - gamma_q_contfrac(a, x, gln);
    return Probability(p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p));
}

double inverse_regularized_gamma_p(double a, double p) {
    if (!(a > 0.0) || !std::isfinite(a))
        domain_fail("inverse_regularized_gamma_p: shape must be finite and positive");
    if (!(p > 0.0 && p < 1.0))
        domain_fail("inverse_regularized_gamma_p: probability must lie strictly inside (0, 1)");

    const double gln = log_gamma(a);
    const double a1 = a - 1.0;

    // Seed: Wilson-Hilferty for a > 1, power/log split otherwise.
    double x;
    if (a > 1.0) {
        const double z = std_normal_quantile(p);
        const double w = 1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a));
        x = std::max(1e-3, a * w * w * w);
    } else {
        const double t = 1.0 - a * (0.253 + a * 0.12);
        x = (p < t) ? std::pow(p / t, 1.0 / a) : 1.0 - std::log(1.0 - (p - t) / (1.0 - t));
    }
    if (!(x > 0.0) || !std::isfinite(x)) x = 1e-300;

    // Halley iteration on P(a, x) - p, kept inside a sign-change bracket.
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 64; ++it) {
        const double err = static_cast<double>(regularized_gamma_p(a, x)) - p;
        if (err > 0.0)
            hi = x;
        else
            lo = x;
        if (std::fabs(err) < 1e-13 && it > 0) break;

        const double lnd = -x + a1 * std::log(x) - gln; // log of dP/dx
        double xnew;
        if (std::isfinite(lnd)) {
            const double dens = std::exp(lnd);
            if (dens > 0.0 && std::isfinite(dens)) {
                const double u = err / dens;
                const double halley = 1.0 - 0.5 * std::min(1.0, u * (a1 / x - 1.0));
                xnew = x - u / halley;
            } else {
                xnew = std::numeric_limits<double>::quiet_NaN();
            }
        } else {
            xnew = std::numeric_limits<double>::quiet_NaN();
        }
        if (!(xnew > lo && xnew < hi) || !std::isfinite(xnew))
            xnew = std::isfinite(hi) ? 0.5 * (lo + hi) : std::max(2.0 * x, 1.0);
        if (xnew == x) break;
        x = xnew;
    }
    return x;
}

} // namespace recf
