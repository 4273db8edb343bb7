#pragma once

#include <span>
#include <vector>

#include "mellinsphere/log_value.hpp"

namespace mellinsphere::saddle {

/// Saddle data of the contour integral at a positive evaluation point lambda.
///
/// gamma solves digamma(gamma) = ln(lambda); ln_L = ln_gamma(gamma) - gamma*ln(lambda);
/// sigma = trigamma(gamma) is the curvature of the exponent along the contour.
struct SaddleSolution {
    double lambda = 0.0;
    double gamma = 0.0;
    double ln_L = 0.0;
    double sigma = 0.0;
};

/// The point where L = 1: gamma_cr solves ln_gamma(g) = g*digamma(g),
/// lambda_cr = exp(digamma(gamma_cr)). residual is h(gamma_cr).
struct CriticalPoint {
    double gamma_cr = 0.0;
    double lambda_cr = 0.0;
    double residual = 0.0;
};

/// Minimum of the convex function ln_gamma(g) - g*ln(lambda) located by golden-section search.
struct LegendreMinimum {
    double gamma = 0.0;
    double ln_L = 0.0;
};

/// Unique gamma > 0 with |digamma(gamma) - y| < 1e-12 (scaled by max(1, |y|)).
/// Safeguarded Newton iteration; throws ConvergenceError if the cap is hit.
[[nodiscard]] double inverse_digamma(double y);

[[nodiscard]] SaddleSolution solve_saddle(double lambda);

/// ln L(lambda) = ln Gamma(gamma(lambda)) - gamma(lambda) ln(lambda), L = lim F_n^{1/n}.
[[nodiscard]] LogValue L_value(double lambda);

/// ln L as the Legendre-type minimum over gamma; independent of the Newton solver.
[[nodiscard]] LegendreMinimum legendre_minimum(double lambda);
[[nodiscard]] LogValue L_value_legendre(double lambda);

/// Bisection on h(g) = ln_gamma(g) - g*digamma(g) over [1, 2]; h is strictly decreasing.
[[nodiscard]] CriticalPoint critical_point();

/// Small-lambda approximation gamma ~ 1/(|ln lambda| - C).
/// Requires 0 < lambda < exp(-C) so the right-hand side is positive.
[[nodiscard]] double gamma_asymptotic_zero(double lambda);

/// One SaddleSolution per grid point; the grid must be positive and strictly increasing.
[[nodiscard]] std::vector<SaddleSolution> tabulate(std::span<const double> lambda_grid);

} // namespace mellinsphere::saddle
