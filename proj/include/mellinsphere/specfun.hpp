#pragma once

#include <complex>
#include <numbers>

#include "mellinsphere/log_value.hpp"

namespace mellinsphere::specfun {

/// Euler-Mascheroni constant C, with digamma(1) == -C.
inline constexpr double euler_constant = std::numbers::egamma_v<double>;

using ComplexPoint = std::complex<double>;

// Real-argument kernels. All require x > 0 (finite) and throw DomainError otherwise.
// Evaluation: upward recurrence to x >= 8, then the Stirling-type asymptotic series.

/// ln Gamma(x).
[[nodiscard]] double ln_gamma(double x);

/// psi(x) = Gamma'(x)/Gamma(x).
[[nodiscard]] double digamma(double x);

/// psi'(x); strictly positive.
[[nodiscard]] double trigamma(double x);

/// Principal branch of ln Gamma(s) for Re s > 0.
///
/// The branch is the analytic continuation from the positive real axis, so the
/// imaginary part is continuous (and unbounded) along vertical lines; it is
/// not reduced modulo 2*pi.
[[nodiscard]] ComplexPoint ln_gamma_complex(ComplexPoint s);

/// ln K_0(x), the modified Bessel function of the second kind.
///
/// Evaluated from K_0(x) = int_0^inf exp(-x cosh t) dt with the factor
/// exp(-x) pulled out analytically, so the result stays finite far past the
/// point where K_0 itself underflows.
[[nodiscard]] LogValue bessel_k0(double x);

} // namespace mellinsphere::specfun
