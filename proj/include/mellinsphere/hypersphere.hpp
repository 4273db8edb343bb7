#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mellinsphere/log_value.hpp"

namespace mellinsphere::hypersphere {

/// Hypersphere prod y_k = r^n with Laplace dual vector f (one entry per dimension).
struct HypersphereSpec {
    int n = 1;
    double r = 1.0;
    std::vector<double> f;
};

/// Discretized grand-ensemble functional: weights approximate the normalized measure dt.
struct GrandEnsembleSpec {
    double theta = 1.0;
    std::vector<double> f;
    std::vector<double> weights;
};

enum class Regime { diverges, vanishes, critical_band };

[[nodiscard]] std::string_view to_string(Regime regime) noexcept;

struct RegimeReport {
    double lambda_eff = 0.0;
    Regime regime = Regime::critical_band;
    double margin = 0.0;  // lambda_eff - lambda_cr
};

/// Oracle used by laplace_dn. Monte Carlo also needs a sample count and seed.
struct OracleSelector {
    Method method = Method::contour;
    double quadrature_tol = 1e-10;
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 1;
};

/// Radius schedule r_n = c * n^alpha, or the pinned preset r_n = lambda_cr / rho(f).
struct RadiusSchedule {
    double c = 1.0;
    double alpha = 0.0;
    bool pinned_critical = false;
};

struct EnsembleRow {
    int n = 0;
    double lambda_eff = 0.0;
    double ln_D_over_n = 0.0;
    Regime regime = Regime::critical_band;
    double ln_psi_theta = 0.0;
};

/// exp(mean ln f_k). Logs are summed in sorted order, so the result is
/// bitwise invariant under permutations of f.
[[nodiscard]] double geometric_mean(std::span<const double> f);

/// ln D_n(f) = ln F_n(rho_n(f) * r) by the selected oracle.
[[nodiscard]] OracleResult laplace_dn(const HypersphereSpec& spec, const OracleSelector& method = {});

/// Position of lambda_eff relative to lambda_cr with caller-supplied band half-width epsilon.
[[nodiscard]] RegimeReport classify_regime(double lambda_eff, double epsilon);

/// lambda_n with |ln F_n(lambda_n)| < 1e-9, by bisection on the contour oracle.
[[nodiscard]] double unit_crossing(int n);

/// ln Psi_theta(f) = -theta * sum_k weights_k ln f_k.
[[nodiscard]] LogValue psi_theta(const GrandEnsembleSpec& spec);

/// Rows (n, lambda_eff, ln D_n / n, regime, ln Psi_theta(f)) for each n in n_grid.
/// Psi_theta uses uniform weights over f; D_n uses rho(f) and the contour oracle.
[[nodiscard]] std::vector<EnsembleRow> ensemble_comparison(std::span<const double> f, double theta,
                                                           const RadiusSchedule& schedule,
                                                           std::span<const int> n_grid, double epsilon);

} // namespace mellinsphere::hypersphere
