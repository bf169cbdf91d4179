// Independent reference implementations used only by tests. Everything here
// is deliberately slow and simple so it cannot share bugs with the library:
// long double series/continued fractions, bisection, brute-force enumeration.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

// erf via its Maclaurin series; accurate to ~1e-17 for |x| <= 2 where the
// alternating terms stay small.
inline long double erf_series(long double x) {
    const long double two_over_sqrt_pi = 1.128379167095512573896L;
    long double term = x;
    long double sum = x;
    const long double x2 = x * x;
    for (int n = 1; n < 200; ++n) {
        term *= -x2 / n;
        const long double add = term / (2 * n + 1);
        sum += add;
        if (std::fabs(add) < 1e-22L * std::fabs(sum)) break;
    }
    return two_over_sqrt_pi * sum;
}

// erfc via the Laplace continued fraction (modified Lentz); good for x >= 1.
inline long double erfc_contfrac(long double x) {
    const long double tiny = 1e-300L;
    long double f = x, c = x, d = 0.0L;
    for (int n = 1; n < 300; ++n) {
        const long double a = n / 2.0L;
        // b alternates between x (odd step uses +a/x form below) -- the
        // classical expansion erfc(x) = e^{-x^2}/sqrt(pi) / (x + 1/2/(x + 1/(x + 3/2/(x + ...))))
        d = x + a * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0L / d;
        const long double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0L) < 1e-20L) break;
    }
    return std::exp(-x * x) / std::sqrt(3.141592653589793238463L) / f;
}

// Standard normal CDF accurate to ~1e-16 absolute over |x| <= 8.
inline double phi(double x) {
    const long double z = static_cast<long double>(x) / std::sqrt(2.0L);
    if (std::fabs(z) <= 2.0L)
        return static_cast<double>(0.5L * (1.0L + erf_series(z)));
    if (z > 0)
        return static_cast<double>(1.0L - 0.5L * erfc_contfrac(z));
    return static_cast<double>(0.5L * erfc_contfrac(-z));
}

// Bisection for a strictly increasing f; returns x with f(x) = target within
// an interval of width tol.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double target, double tol = 1e-13) {
    double flo = f(lo) - target;
    if (flo > 0.0) throw std::logic_error("bisect: target below f(lo)");
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) - target <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Minimal total discrepancy sum |f_i - g_{pi(i)}|^p over all pairings pi.
// Factorial cost; callers keep m <= 8.
inline double min_pairing_cost(std::vector<double> f, const std::vector<double>& g, double p) {
    std::vector<std::size_t> idx(f.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end());
    double best = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i)
            cost += std::pow(std::fabs(f[i] - g[idx[i]]), p);
        best = std::min(best, cost);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

// Dense 4-dimensional grid search for the minimal pairwise sorting gain over
// the box, at a fixed step. Brute force against which eta_p is checked.
inline double eta_grid(double p, double eps, double lo, double hi, double step) {
    auto powp = [p](double d) { return std::pow(std::fabs(d), p); };
    double best = std::numeric_limits<double>::infinity();
    for (double v = lo; v <= hi - eps + 1e-15; v += step)
        for (double vp = v + eps; vp <= hi + 1e-15; vp += step)
            for (double t = lo; t <= hi - eps + 1e-15; t += step)
                for (double tp = t + eps; tp <= hi + 1e-15; tp += step) {
                    const double val =
                        powp(v - tp) + powp(vp - t) - powp(v - t) - powp(vp - tp);
                    best = std::min(best, val);
                }
    return best;
}

// Equal-weight discrete L_p distance between two equally long vectors;
// p = infinity takes the max. The norm in which sorting is provably a
// contraction.
inline double flat_lp(const std::vector<double>& a, const std::vector<double>& b, double p) {
    if (std::isinf(p)) {
        double mx = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            mx = std::max(mx, std::fabs(a[i] - b[i]));
        return mx;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::pow(std::fabs(a[i] - b[i]), p);
    return std::pow(acc / static_cast<double>(a.size()), 1.0 / p);
}

} // namespace oracle
