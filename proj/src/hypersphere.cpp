#include "mellinsphere/hypersphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mellinsphere/fn_oracles.hpp"
#include "mellinsphere/saddle.hpp"

namespace mellinsphere::hypersphere {

namespace {

constexpr double kCrossingTolerance = 1e-9;
constexpr int kMaxWidenings = 10;

void check_entries(std::span<const double> f, const char* what)
{
    detail::require(!f.empty(), std::string(what) + ": f must be non-empty");
    for (double v : f) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError(std::string(what) + ": entries of f must be positive and finite");
        }
    }
}

double lambda_cr()
{
    static const double value = saddle::critical_point().lambda_cr;
    return value;
}

OracleResult evaluate(int n, double lambda, const OracleSelector& selector)
{
    switch (selector.method) {
    case Method::closed_form:
        if (n == 1) {
            return oracles::f1_exact(lambda);
        }
        if (n == 2) {
            return oracles::f2_exact(lambda);
        }
        throw DomainError("closed-form oracle is available only for n = 1 and n = 2");
    case Method::quadrature:
        return oracles::fn_quadrature(n, lambda, selector.quadrature_tol);
    case Method::contour:
        return oracles::fn_contour(n, lambda);
    case Method::monte_carlo:
        return oracles::fn_montecarlo(n, lambda, selector.samples, selector.seed);
    case Method::asymptotic:
        return oracles::fn_saddle_asymptotic(n, lambda);
    }
    throw DomainError("unknown oracle");
}

} // namespace

std::string_view to_string(Regime regime) noexcept
{
    switch (regime) {
    case Regime::diverges: return "diverges";
    case Regime::vanishes: return "vanishes";
    case Regime::critical_band: return "critical-band";
    }
    return "unknown";
}

double geometric_mean(std::span<const double> f)
{
    check_entries(f, "geometric_mean");
    std::vector<double> logs(f.size());
    std::transform(f.begin(), f.end(), logs.begin(), [](double v) { return std::log(v); });
    std::sort(logs.begin(), logs.end());
    double sum = 0.0;
    for (double l : logs) {
        sum += l;
    }
    return std::exp(sum / static_cast<double>(logs.size()));
}

OracleResult laplace_dn(const HypersphereSpec& spec, const OracleSelector& method)
{
    detail::require(spec.n >= 1, "laplace_dn: n must be >= 1");
    detail::require(spec.r > 0.0 && std::isfinite(spec.r), "laplace_dn: r must be positive");
    detail::require(spec.f.size() == static_cast<std::size_t>(spec.n), "laplace_dn: f must have n entries");
    const double lambda_eff = geometric_mean(spec.f) * spec.r;
    return evaluate(spec.n, lambda_eff, method);
}

RegimeReport classify_regime(double lambda_eff, double epsilon)
{
    detail::require(lambda_eff > 0.0 && std::isfinite(lambda_eff), "classify_regime: lambda_eff must be positive");
    detail::require(epsilon > 0.0 && std::isfinite(epsilon), "classify_regime: epsilon must be positive");
    const double margin = lambda_eff - lambda_cr();
    Regime regime = Regime::critical_band;
    if (margin < -epsilon) {
        regime = Regime::diverges;
    } else if (margin > epsilon) {
        regime = Regime::vanishes;
    }
    return {lambda_eff, regime, margin};
}

double unit_crossing(int n)
{
    detail::require(n >= 2, "unit_crossing: n must be >= 2");
    const auto ln_f = [n](double lambda) { return oracles::fn_contour(n, lambda).value.ln(); };

    // ln F_n is strictly decreasing in lambda: need ln F(lo) > 0 > ln F(hi).
    double lo = 0.3 * lambda_cr();
    double hi = 3.0 * lambda_cr();
    double f_lo = ln_f(lo);
    double f_hi = ln_f(hi);
    for (int widening = 0; f_lo <= 0.0 || f_hi >= 0.0; ++widening) {
        if (widening == kMaxWidenings) {
            throw BracketError("unit_crossing: no sign change after " + std::to_string(kMaxWidenings) + " widenings");
        }
        if (f_lo <= 0.0) {
            lo /= 3.0;
            f_lo = ln_f(lo);
        }
        if (f_hi >= 0.0) {
            hi *= 3.0;
            f_hi = ln_f(hi);
        }
    }

    double mid = 0.5 * (lo + hi);
    double f_mid = ln_f(mid);
    while (std::abs(f_mid) >= kCrossingTolerance) {
        (f_mid > 0.0 ? lo : hi) = mid;
        const double next = 0.5 * (lo + hi);
        if (next <= lo || next >= hi) {
            throw ConvergenceError("unit_crossing: bracket collapsed before reaching the residual tolerance");
        }
        mid = next;
        f_mid = ln_f(mid);
    }
    return mid;
}

LogValue psi_theta(const GrandEnsembleSpec& spec)
{
    detail::require(spec.theta > 0.0 && std::isfinite(spec.theta), "psi_theta: theta must be positive");
    check_entries(spec.f, "psi_theta");
    detail::require(spec.weights.size() == spec.f.size(), "psi_theta: weights and f must have equal length");
    double total = 0.0;
    for (double w : spec.weights) {
        detail::require(w >= 0.0 && std::isfinite(w), "psi_theta: weights must be nonnegative");
        total += w;
    }
    detail::require(std::abs(total - 1.0) <= 1e-12, "psi_theta: weights must sum to 1");

    double mean_log = 0.0;
    for (std::size_t k = 0; k < spec.f.size(); ++k) {
        mean_log += spec.weights[k] * std::log(spec.f[k]);
    }
    // + 0.0 turns -0 into +0 when every f_k = 1.
    return LogValue(-spec.theta * mean_log + 0.0);
}

std::vector<EnsembleRow> ensemble_comparison(std::span<const double> f, double theta, const RadiusSchedule& schedule,
                                             std::span<const int> n_grid, double epsilon)
{
    check_entries(f, "ensemble_comparison");
    detail::require(epsilon > 0.0, "ensemble_comparison: epsilon must be positive");
    if (!schedule.pinned_critical) {
        detail::require(schedule.c > 0.0 && std::isfinite(schedule.c), "ensemble_comparison: radius c must be positive");
        detail::require(std::isfinite(schedule.alpha), "ensemble_comparison: radius alpha must be finite");
    }
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        detail::require(n_grid[i] >= 1, "ensemble_comparison: n must be >= 1");
        detail::require(i == 0 || n_grid[i] > n_grid[i - 1], "ensemble_comparison: n_grid must be increasing");
    }

    const double rho = geometric_mean(f);
    const std::vector<double> weights(f.size(), 1.0 / static_cast<double>(f.size()));
    GrandEnsembleSpec grand{theta, {f.begin(), f.end()}, weights};
    // Uniform weights may miss 1 by a few ulps; renormalize the last one.
    double partial = 0.0;
    for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
        partial += weights[k];
    }
    grand.weights.back() = 1.0 - partial;
    const double ln_psi = psi_theta(grand).ln();

    std::vector<EnsembleRow> rows;
    rows.reserve(n_grid.size());
    for (int n : n_grid) {
        const double r_n =
            schedule.pinned_critical ? lambda_cr() / rho : schedule.c * std::pow(static_cast<double>(n), schedule.alpha);
        const double lambda_eff = rho * r_n;
        const double ln_d = oracles::fn_contour(n, lambda_eff).value.ln();
        rows.push_back({n, lambda_eff, ln_d / n, classify_regime(lambda_eff, epsilon).regime, ln_psi});
    }
    return rows;
}

} // namespace mellinsphere::hypersphere
