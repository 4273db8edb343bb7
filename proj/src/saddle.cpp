#include "mellinsphere/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <string>

#include "mellinsphere/specfun.hpp"

namespace mellinsphere::saddle {

namespace {

using specfun::digamma;
using specfun::euler_constant;
using specfun::ln_gamma;
using specfun::trigamma;

constexpr int kMaxNewtonIterations = 50;
constexpr double kResidualTolerance = 1e-12;
// Below this y the small-argument expansion psi(g) ~ -1/g - C is the better start.
constexpr double kGuessSwitch = -2.22;

void check_lambda(double lambda, const char* what)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError(std::string(what) + ": lambda must be positive and finite");
    }
}

double critical_h(double g)
{
    return ln_gamma(g) - g * digamma(g);
}

} // namespace

double inverse_digamma(double y)
{
    if (!std::isfinite(y)) {
        throw DomainError("inverse_digamma: argument must be finite");
    }
    double gamma = y >= kGuessSwitch ? std::exp(y) + 0.5 : -1.0 / (y + euler_constant);

    // Bracket [lo, hi] with digamma(lo) <= y <= digamma(hi), tightened every step.
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    const double tolerance = kResidualTolerance * std::max(1.0, std::abs(y));

    for (int iteration = 0; iteration < kMaxNewtonIterations; ++iteration) {
        const double residual = digamma(gamma) - y;
        if (residual == 0.0) {
            return gamma;
        }
        if (residual < 0.0) {
            lo = std::max(lo, gamma);
        } else {
            hi = std::min(hi, gamma);
        }

        double next = gamma - residual / trigamma(gamma);
        if (!(next > lo && next < hi)) {
            next = std::isfinite(hi) ? 0.5 * (lo + hi) : 2.0 * std::max(gamma, lo);
        }
        const double step = std::abs(next - gamma);
        gamma = next;
        if (step <= 4.0 * std::numeric_limits<double>::epsilon() * gamma) {
            break;
        }
    }
    const double residual = digamma(gamma) - y;
    if (!(std::abs(residual) < tolerance)) {
        throw ConvergenceError("inverse_digamma: residual " + std::to_string(residual) + " above tolerance for y = " +
                               std::to_string(y));
    }
    return gamma;
}

SaddleSolution solve_saddle(double lambda)
{
    check_lambda(lambda, "solve_saddle");
    const double ln_lambda = std::log(lambda);
    const double gamma = inverse_digamma(ln_lambda);
    return {lambda, gamma, ln_gamma(gamma) - gamma * ln_lambda, trigamma(gamma)};
}

LogValue L_value(double lambda)
{
    return LogValue(solve_saddle(lambda).ln_L);
}

LegendreMinimum legendre_minimum(double lambda)
{
    check_lambda(lambda, "L_value_legendre");
    const double ln_lambda = std::log(lambda);
    const auto objective = [ln_lambda](double g) { return ln_gamma(g) - g * ln_lambda; };

    // Downhill walk in log(g) until the objective turns up; the objective is
    // convex in g, hence unimodal in log(g).
    double u_mid = 0.0;
    double f_mid = objective(1.0);
    double step = 1.0;
    if (objective(std::exp(step)) > f_mid) {
        step = -step;
    }
    double u_prev = u_mid - step;
    double u_next = u_mid + step;
    double f_next = objective(std::exp(u_next));
    while (f_next < f_mid) {
        u_prev = u_mid;
        u_mid = u_next;
        f_mid = f_next;
        step *= 2.0;
        u_next = u_mid + step;
        f_next = objective(std::exp(u_next));
    }
    double a = std::exp(std::min(u_prev, u_next));
    double b = std::exp(std::max(u_prev, u_next));

    constexpr double inv_phi = 0.61803398874989484820458683436563811;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = objective(x1);
    double f2 = objective(x2);
    for (int iteration = 0; iteration < 400 && (b - a) > 1e-15 * (a + b); ++iteration) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = objective(x2);
        }
    }
    const double gamma = f1 < f2 ? x1 : x2;
    return {gamma, std::min(f1, f2)};
}

LogValue L_value_legendre(double lambda)
{
    return LogValue(legendre_minimum(lambda).ln_L);
}

CriticalPoint critical_point()
{
    // h(1) = C > 0, h(2) = 2C - 2 < 0 and h' = -g trigamma(g) < 0.
    double lo = 1.0;
    double hi = 2.0;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (critical_h(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double h_lo = critical_h(lo);
    const double h_hi = critical_h(hi);
    const double gamma_cr = std::abs(h_lo) <= std::abs(h_hi) ? lo : hi;
    return {gamma_cr, std::exp(digamma(gamma_cr)), critical_h(gamma_cr)};
}

double gamma_asymptotic_zero(double lambda)
{
    check_lambda(lambda, "gamma_asymptotic_zero");
    const double denominator = -std::log(lambda) - euler_constant;
    if (!(lambda < 1.0) || !(denominator > 0.0)) {
        throw DomainError("gamma_asymptotic_zero: requires 0 < lambda < exp(-C)");
    }
    return 1.0 / denominator;
}

std::vector<SaddleSolution> tabulate(std::span<const double> lambda_grid)
{
    for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
        check_lambda(lambda_grid[i], "tabulate");
        if (i > 0 && !(lambda_grid[i] > lambda_grid[i - 1])) {
            throw DomainError("tabulate: grid must be strictly increasing");
        }
    }
    std::vector<SaddleSolution> rows;
    rows.reserve(lambda_grid.size());
    std::transform(lambda_grid.begin(), lambda_grid.end(), std::back_inserter(rows), solve_saddle);
    return rows;
}

} // namespace mellinsphere::saddle
