#pragma once

namespace recf {

// A probability value, validated to lie in [0, 1].
class Probability {
public:
    explicit Probability(double value);
    operator double() const noexcept { return value_; }
    double value() const noexcept { return value_; }

private:
    double value_;
};

// Natural log of the Gamma function for x > 0 (Lanczos approximation, g = 7).
double log_gamma(double x);

// Standard normal distribution function Phi(x).
Probability std_normal_cdf(double x);

// Standard normal density phi(x) = exp(-x^2/2) / sqrt(2 pi).
double std_normal_pdf(double x);

// Standard normal quantile Phi^{-1}(u), 0 < u < 1. Rational minimax seed
// (Acklam) followed by one Newton step against std_normal_cdf.
double std_normal_quantile(double u);

// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0. Power series
// for x < a + 1, continued fraction (modified Lentz) otherwise.
Probability regularized_gamma_p(double a, double x);

// Inverse of P(a, .) in its second argument: the x with P(a, x) = p for
// 0 < p < 1. Bracketed Newton/Halley iteration seeded by the Wilson-Hilferty
// approximation (small-shape seed for a <= 1).
double inverse_regularized_gamma_p(double a, double p);

} // namespace recf
