#pragma once

#include <cstdint>
#include <optional>

#include "mellinsphere/log_value.hpp"

namespace mellinsphere::oracles {

/// Vertical contour Re s = gamma, truncated to |Im s| <= half_width, trapezoidal step `step`.
struct ContourSpec {
    double gamma = 0.0;
    double half_width = 0.0;
    double step = 0.0;
};

/// Box [-X, X]^{n-1} on the free hyperplane coordinates x_1..x_{n-1}.
struct QuadratureDomain {
    int dimension = 0;  // n - 1
    double half_width = 0.0;
};

/// Smallest box satisfying lambda*e^{X/(n-1)} >= ln(1/tol) + n*X + n*lambda.
/// This implies the weaker bound lambda*e^X >= ln(1/tol) + n*X.
[[nodiscard]] QuadratureDomain quadrature_domain(int n, double lambda, double tol);

// The four routes to ln F_n(lambda), F_n(lambda) = int_{sum x = 0} exp(-lambda sum_k e^{x_k}) dx_1..dx_{n-1}.

/// ln F_1(lambda) = -lambda.
[[nodiscard]] OracleResult f1_exact(double lambda);

/// ln F_2(lambda) = ln 2 + ln K_0(2 lambda).
[[nodiscard]] OracleResult f2_exact(double lambda);

/// Nested adaptive quadrature over the hyperplane, n in [2, 4], tol in [1e-12, 1e-3].
[[nodiscard]] OracleResult fn_quadrature(int n, double lambda, double tol = 1e-10);

/// Trapezoidal rule on F_n(lambda) = (1/2 pi) int exp(n phi(t)) dt,
/// phi(t) = ln Gamma(gamma + i t) - (gamma + i t) ln lambda.
///
/// Without a spec the contour passes through the saddle gamma(lambda), T is
/// chosen so the integrand at +-T is below 1e-14 of the peak and step = T/2000.
/// A caller-supplied spec is validated (gamma > 0, T/step integral and >= 100)
/// and rejected with TruncationError when the integrand at +-T exceeds
/// truncation_tol relative to the peak.
[[nodiscard]] OracleResult fn_contour(int n, double lambda, std::optional<ContourSpec> spec = std::nullopt,
                                      double truncation_tol = 1e-14);

/// Gaussian saddle approximation n ln L(lambda) - (1/2) ln(2 pi n sigma).
[[nodiscard]] OracleResult fn_saddle_asymptotic(int n, double lambda);

/// Importance-sampling estimate with an isotropic Gaussian proposal on the hyperplane.
/// Deterministic for a given seed. Requires n >= 2 and samples >= 10^4.
[[nodiscard]] OracleResult fn_montecarlo(int n, double lambda, std::int64_t samples, std::uint64_t seed);

} // namespace mellinsphere::oracles
