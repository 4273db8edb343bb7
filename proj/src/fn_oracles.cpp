#include "mellinsphere/fn_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "mellinsphere/quadrature.hpp"
#include "mellinsphere/saddle.hpp"
#include "mellinsphere/specfun.hpp"

namespace mellinsphere {

std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::closed_form: return "closed-form";
    case Method::quadrature: return "quadrature";
    case Method::contour: return "contour";
    case Method::monte_carlo: return "monte-carlo";
    case Method::asymptotic: return "asymptotic";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    for (Method m : {Method::closed_form, Method::quadrature, Method::contour, Method::monte_carlo,
                     Method::asymptotic}) {
        if (name == to_string(m)) {
            return m;
        }
    }
    throw DomainError("unknown method '" + std::string(name) + "'");
}

} // namespace mellinsphere

namespace mellinsphere::oracles {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAutoTruncation = 1e-14;
constexpr int kAutoPanels = 2000;

void check_lambda(double lambda, const char* what)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError(std::string(what) + ": lambda must be positive and finite");
    }
}

// Nested integration over x_1..x_{n-1} of exp(-lambda (sum_k e^{x_k} - n)),
// x_n = -(x_1 + ... + x_{n-1}). The shift by n*lambda makes the peak value
// (at x = 0) exactly 1, so no level over- or underflows.
class HyperplaneIntegral {
public:
    HyperplaneIntegral(int n, double lambda, double tol, double box)
        : n_(n), lambda_(lambda), tol_(tol), box_(box)
    {
    }

    // Integral over x_j given partial sums S = sum_{k<j} x_k and E = sum_{k<j} e^{x_k}.
    [[nodiscard]] quadrature::Estimate level(int j, double S, double E) const
    {
        const int m = n_ - j;  // x_j .. x_{n-1} remain, the last is dependent
        const double level_tol = tol_ / std::pow(3.0, j);

        // By AM-GM the remaining m-1 coordinates contribute at least
        // (m-1) e^{-(S+x)/(m-1)}, so relative to the slice maximum the integrand
        // is below exp(-lambda (g(x) - g_min)) with g_min = m e^{-S/m}.
        const double cutoff = std::log(1.0 / level_tol) + kTruncationMargin;
        const double bound = m * std::exp(-S / m) + cutoff / lambda_;
        const double right = std::min(box_, std::log(bound));
        const double left = std::max(-box_, -S - (m - 1) * std::log(bound / (m - 1)));

        if (m == 2) {
            const auto integrand = [&](double x) {
                return std::exp(-lambda_ * (E + std::exp(x) + std::exp(-S - x) - n_));
            };
            return quadrature::integrate(integrand, left, right, level_tol);
        }
        const auto integrand = [&](double x) { return level(j + 1, S + x, E + std::exp(x)).value; };
        return quadrature::integrate(integrand, left, right, level_tol);
    }

private:
    static constexpr double kTruncationMargin = 10.0;

    int n_;
    double lambda_;
    double tol_;
    double box_;
};

std::complex<double> contour_exponent(double gamma, double t, double ln_lambda)
{
    const std::complex<double> s{gamma, t};
    return specfun::ln_gamma_complex(s) - s * ln_lambda;
}

} // namespace

QuadratureDomain quadrature_domain(int n, double lambda, double tol)
{
    detail::require(n >= 2, "quadrature_domain: n must be >= 2");
    check_lambda(lambda, "quadrature_domain");
    const double target = std::log(1.0 / tol) + n * lambda;
    const auto slack = [&](double x) { return lambda * std::exp(x / (n - 1)) - n * x - target; };
    double hi = 1.0;
    while (slack(hi) < 0.0) {
        hi *= 2.0;
    }
    double lo = hi / 2.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (slack(mid) < 0.0 ? lo : hi) = mid;
    }
    return {n - 1, hi};
}

OracleResult f1_exact(double lambda)
{
    check_lambda(lambda, "f1_exact");
    return {LogValue(-lambda), 0.0, Method::closed_form};
}

OracleResult f2_exact(double lambda)
{
    check_lambda(lambda, "f2_exact");
    // int exp(-lambda (e^x + e^-x)) dx = int exp(-2 lambda cosh x) dx = 2 K0(2 lambda)
    const LogValue k0 = specfun::bessel_k0(2.0 * lambda);
    return {LogValue(std::numbers::ln2 + k0.ln()), 1e-13 * std::max(1.0, std::abs(k0.ln())), Method::closed_form};
}

OracleResult fn_quadrature(int n, double lambda, double tol)
{
    detail::require(n >= 2 && n <= 4, "fn_quadrature: n must be in [2, 4]");
    check_lambda(lambda, "fn_quadrature");
    detail::require(tol >= 1e-12 && tol <= 1e-3, "fn_quadrature: tol must be in [1e-12, 1e-3]");

    const QuadratureDomain domain = quadrature_domain(n, lambda, tol);
    const HyperplaneIntegral integral(n, lambda, tol, domain.half_width);
    const quadrature::Estimate estimate = integral.level(0, 0.0, 0.0);
    if (!(estimate.value > 0.0)) {
        throw NumericalError("fn_quadrature: non-positive integral");
    }
    // Inner levels contribute at most tol/3 + tol/9 + ... < tol/2 relative error.
    const double error = estimate.abs_error / estimate.value + 0.5 * tol;
    return {LogValue(-n * lambda + std::log(estimate.value)), error, Method::quadrature};
}

OracleResult fn_contour(int n, double lambda, std::optional<ContourSpec> spec, double truncation_tol)
{
    detail::require(n >= 1, "fn_contour: n must be >= 1");
    check_lambda(lambda, "fn_contour");
    detail::require(truncation_tol > 0.0 && truncation_tol < 1.0, "fn_contour: truncation_tol must be in (0, 1)");
    const double ln_lambda = std::log(lambda);

    const double gamma = spec ? spec->gamma : saddle::inverse_digamma(ln_lambda);
    detail::require(gamma > 0.0 && std::isfinite(gamma), "fn_contour: contour abscissa must be positive");
    const double peak = contour_exponent(gamma, 0.0, ln_lambda).real();
    // |Gamma(gamma + it)| decreases in |t|, so the integrand modulus peaks at t = 0.
    const auto decay = [&](double t) { return n * (contour_exponent(gamma, t, ln_lambda).real() - peak); };

    double half_width = 0.0;
    int panels = 0;
    if (spec) {
        detail::require(spec->half_width > 0.0 && spec->step > 0.0, "fn_contour: half_width and step must be positive");
        const double ratio = spec->half_width / spec->step;
        const double rounded = std::round(ratio);
        detail::require(std::abs(ratio - rounded) <= 1e-9 * ratio && rounded >= 100.0,
                        "fn_contour: half_width/step must be an integer >= 100");
        half_width = spec->half_width;
        panels = static_cast<int>(rounded);
        if (decay(half_width) > std::log(truncation_tol)) {
            throw TruncationError("fn_contour: integrand at +-T is " + std::to_string(std::exp(decay(half_width))) +
                                  " of the peak, above truncation tolerance");
        }
    } else {
        const double target = std::log(std::min(truncation_tol, kAutoTruncation));
        double hi = 1.0;
        while (decay(hi) > target) {
            hi *= 2.0;
        }
        double lo = hi / 2.0;
        for (int i = 0; i < 40; ++i) {
            const double mid = 0.5 * (lo + hi);
            (decay(mid) > target ? lo : hi) = mid;
        }
        half_width = hi;
        panels = kAutoPanels;
    }
    const double step = half_width / panels;

    // Trapezoidal sums on the full grid and on every second node (step 2h).
    std::complex<double> fine{0.0, 0.0};
    std::complex<double> coarse{0.0, 0.0};
    const int coarse_end = panels - panels % 2;
    for (int k = -panels; k <= panels; ++k) {
        const double t = k * step;
        const std::complex<double> term = std::exp(static_cast<double>(n) * (contour_exponent(gamma, t, ln_lambda) - peak));
        const double weight = (k == -panels || k == panels) ? 0.5 : 1.0;
        fine += weight * term;
        if (k % 2 == 0 && std::abs(k) <= coarse_end) {
            coarse += ((k == -coarse_end || k == coarse_end) ? 0.5 : 1.0) * term;
        }
    }
    if (!(fine.real() > 0.0) || !(coarse.real() > 0.0)) {
        throw NumericalError("fn_contour: contour sum lost positivity (cancellation)");
    }
    const double ln_fine = std::log(step * fine.real());
    const double ln_coarse = std::log(2.0 * step * coarse.real());
    const double error = std::abs(ln_fine - ln_coarse) + std::abs(fine.imag()) / fine.real() +
                         2.0 * std::exp(decay(half_width)) + 64.0 * std::numeric_limits<double>::epsilon() * n;
    return {LogValue(n * peak + ln_fine - std::log(kTwoPi)), error, Method::contour};
}

OracleResult fn_saddle_asymptotic(int n, double lambda)
{
    detail::require(n >= 1, "fn_saddle_asymptotic: n must be >= 1");
    check_lambda(lambda, "fn_saddle_asymptotic");
    const saddle::SaddleSolution s = saddle::solve_saddle(lambda);
    const double ln_value = n * s.ln_L - 0.5 * std::log(kTwoPi * n * s.sigma);

    // Size of the first neglected term, (1/n)[psi'''/(8 psi'^2) - 5 psi''^2/(24 psi'^3)],
    // with psi'' and psi''' from central differences of trigamma.
    const double delta = 1e-3 * s.gamma;
    const double up = specfun::trigamma(s.gamma + delta);
    const double down = specfun::trigamma(s.gamma - delta);
    const double d3 = (up - down) / (2.0 * delta);
    const double d4 = (up - 2.0 * s.sigma + down) / (delta * delta);
    const double correction =
        (d4 / (8.0 * s.sigma * s.sigma) - 5.0 * d3 * d3 / (24.0 * s.sigma * s.sigma * s.sigma)) / n;
    return {LogValue(ln_value), 2.0 * std::abs(correction) + 1.0 / (static_cast<double>(n) * n), Method::asymptotic};
}

OracleResult fn_montecarlo(int n, double lambda, std::int64_t samples, std::uint64_t seed)
{
    detail::require(n >= 2, "fn_montecarlo: n must be >= 2");
    check_lambda(lambda, "fn_montecarlo");
    detail::require(samples >= 10'000, "fn_montecarlo: samples must be >= 10^4");

    // Isotropic in-plane Gaussian: draw z ~ N(0, v I_n) and remove the mean.
    // Its density w.r.t. dx_1..dx_{n-1} is sqrt(n) (2 pi v)^{-(n-1)/2} exp(-|x|^2 / 2v).
    const double variance = std::clamp(1.0 / lambda, 0.05, 20.0);
    const double ln_q0 = 0.5 * std::log(static_cast<double>(n)) - 0.5 * (n - 1) * std::log(kTwoPi * variance);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(variance));
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> log_weights(static_cast<std::size_t>(samples));
    for (auto& lw : log_weights) {
        double mean = 0.0;
        for (auto& xi : x) {
            xi = normal(rng);
            mean += xi;
        }
        mean /= n;
        double norm2 = 0.0;
        double exp_sum = 0.0;
        for (auto& xi : x) {
            xi -= mean;
            norm2 += xi * xi;
            exp_sum += std::exp(xi);
        }
        lw = -lambda * exp_sum - (ln_q0 - norm2 / (2.0 * variance));
    }

    const double shift = *std::max_element(log_weights.begin(), log_weights.end());
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double lw : log_weights) {
        const double w = std::exp(lw - shift);
        sum += w;
        sum_sq += w * w;
    }
    const double count = static_cast<double>(samples);
    const double ess = sum * sum / sum_sq;
    if (ess < 100.0) {
        throw DegenerateWeightsError("fn_montecarlo: effective sample size " + std::to_string(ess) + " < 100");
    }
    const double mean = sum / count;
    const double var = std::max(0.0, sum_sq / count - mean * mean) * count / (count - 1.0);
    const double standard_error = std::sqrt(var / count) / mean;
    return {LogValue(shift + std::log(mean)), standard_error, Method::monte_carlo};
}

} // namespace mellinsphere::oracles
