#pragma once

// Independent oracles for the test suites. Nothing here calls into the
// library; Boost.Math supplies high-precision special functions and quadrature.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace reference {

inline double lgamma(double x) { return static_cast<double>(boost::math::lgamma(static_cast<long double>(x))); }
inline double digamma(double x) { return static_cast<double>(boost::math::digamma(static_cast<long double>(x))); }
inline double trigamma(double x) { return static_cast<double>(boost::math::trigamma(static_cast<long double>(x))); }
inline double bessel_k0(double x)
{
    return static_cast<double>(boost::math::cyl_bessel_k(0, static_cast<long double>(x)));
}

/// K0(x) = int_0^inf exp(-x cosh t) dt by exp-sinh quadrature.
inline double bessel_k0_integral(double x)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate([x](double t) { return std::exp(-x * std::cosh(t)); }, 0.0,
                                std::numeric_limits<double>::infinity(), 1e-14);
}

/// Bisection for a sign change of f on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi)
{
    const bool increasing = f(hi) > f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        ((f(mid) < 0.0) == increasing ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Complex digamma: psi(s) = psi(s + N) - sum_{k<N} 1/(s + k), with a
/// four-term asymptotic tail at s + N, N = 1000.
inline std::complex<double> complex_digamma(std::complex<double> s)
{
    constexpr int shift = 1000;
    std::complex<long double> z(s.real(), s.imag());
    std::complex<long double> sum = 0.0L;
    for (int k = 0; k < shift; ++k) {
        sum += 1.0L / (z + static_cast<long double>(k));
    }
    const std::complex<long double> w = z + static_cast<long double>(shift);
    const std::complex<long double> w2 = w * w;
    const std::complex<long double> tail =
        std::log(w) - 0.5L / w - 1.0L / (12.0L * w2) + 1.0L / (120.0L * w2 * w2) - 1.0L / (252.0L * w2 * w2 * w2);
    const std::complex<long double> result = tail - sum;
    return {static_cast<double>(result.real()), static_cast<double>(result.imag())};
}

/// ln Gamma(x + i y) for y > 0 by Simpson integration of i psi(x + i t) over t in [0, y].
inline std::complex<double> ln_gamma_by_path(double x, double y, int panels = 2000)
{
    const double h = y / panels;
    std::complex<double> sum = complex_digamma({x, 0.0}) + complex_digamma({x, y});
    for (int k = 1; k < panels; ++k) {
        sum += (k % 2 ? 4.0 : 2.0) * complex_digamma({x, k * h});
    }
    const std::complex<double> integral = std::complex<double>(0.0, 1.0) * sum * (h / 3.0);
    return lgamma(x) + integral;
}

inline std::vector<double> log_grid(double lo, double hi, int count)
{
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        grid[static_cast<std::size_t>(i)] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (count - 1));
    }
    return grid;
}

/// |a - b| <= tol * max(1, |b|)
inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

} // namespace reference
