#include "mellinsphere/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace mellinsphere::specfun {

namespace {

constexpr double kShiftThreshold = 8.0;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

// Even-index Bernoulli numbers B_2 .. B_20.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,           -1.0 / 30.0,     1.0 / 42.0,         -1.0 / 30.0,     5.0 / 66.0,
    -691.0 / 2730.0,     7.0 / 6.0,       -3617.0 / 510.0,    43867.0 / 798.0, -174611.0 / 330.0,
};

void check_positive(double x, const char* what)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(what) + ": argument must be positive and finite, got " + std::to_string(x));
    }
}

int shift_count(double x)
{
    return x < kShiftThreshold ? static_cast<int>(std::ceil(kShiftThreshold - x)) : 0;
}

// sum_k B_2k / (2k (2k-1) z^(2k-1)) evaluated by Horner in 1/z^2.
template <class T>
T stirling_tail(T z)
{
    const T inv = T(1.0) / z;
    const T inv2 = inv * inv;
    T sum = T(0.0);
    for (std::size_t i = kBernoulli.size(); i-- > 0;) {
        const double k2 = 2.0 * static_cast<double>(i + 1);
        sum = sum * inv2 + T(kBernoulli[i] / (k2 * (k2 - 1.0)));
    }
    return sum * inv;
}

} // namespace

double ln_gamma(double x)
{
    check_positive(x, "ln_gamma");
    double product = 1.0;
    while (x < kShiftThreshold) {
        product *= x;
        x += 1.0;
    }
    const double series = (x - 0.5) * std::log(x) - x + kHalfLog2Pi + stirling_tail(x);
    return product == 1.0 ? series : series - std::log(product);
}

double digamma(double x)
{
    check_positive(x, "digamma");
    // Reciprocals are accumulated largest-x first so the dominant 1/x is added last.
    const int steps = shift_count(x);
    double shift = 0.0;
    for (int k = steps - 1; k >= 0; --k) {
        shift += 1.0 / (x + k);
    }
    const double z = x + steps;
    const double inv2 = 1.0 / (z * z);
    double series = 0.0;
    for (std::size_t i = kBernoulli.size(); i-- > 0;) {
        const double k2 = 2.0 * static_cast<double>(i + 1);
        series = series * inv2 + kBernoulli[i] / k2;
    }
    series *= inv2;
    return std::log(z) - 0.5 / z - series - shift;
}

double trigamma(double x)
{
    check_positive(x, "trigamma");
    const int steps = shift_count(x);
    double shift = 0.0;
    for (int k = steps - 1; k >= 0; --k) {
        const double w = x + k;
        shift += 1.0 / (w * w);
    }
    const double z = x + steps;
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double series = 0.0;
    for (std::size_t i = kBernoulli.size(); i-- > 0;) {
        series = series * inv2 + kBernoulli[i];
    }
    series *= inv2 * inv;
    return inv + 0.5 * inv2 + series + shift;
}

ComplexPoint ln_gamma_complex(ComplexPoint s)
{
    if (!(s.real() > 0.0) || !std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw DomainError("ln_gamma_complex: requires finite s with Re s > 0");
    }
    // Each log(s + k) has Re > 0, so its principal value never crosses the cut
    // and the sum is the analytic continuation of the real-axis branch.
    ComplexPoint shift{0.0, 0.0};
    while (s.real() < kShiftThreshold) {
        shift += std::log(s);
        s += 1.0;
    }
    const ComplexPoint series = (s - 0.5) * std::log(s) - s + kHalfLog2Pi + stirling_tail(s);
    return series - shift;
}

LogValue bessel_k0(double x)
{
    check_positive(x, "bessel_k0");
    // K0(x) = (1/2) int_R exp(-x cosh t) dt. The integrand is entire and decays
    // double-exponentially, so the plain trapezoidal rule converges like
    // exp(-2 pi d / h). For large x the integrand is a Gaussian of width
    // 1/sqrt(x) and the step shrinks with it.
    const double h = std::min(0.05, 0.5 / std::sqrt(x));
    // Terms exp(-x (cosh t - 1)), cosh t - 1 = 2 sinh^2(t/2) avoids cancellation.
    double sum = 0.5;
    for (int k = 1;; ++k) {
        const double s = std::sinh(0.5 * h * k);
        const double term = std::exp(-2.0 * x * s * s);
        sum += term;
        if (term < 1e-18 * sum) {
            break;
        }
    }
    return LogValue(-x + std::log(h * sum));
}

} // namespace mellinsphere::specfun
