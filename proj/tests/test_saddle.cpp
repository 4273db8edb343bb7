#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "mellinsphere/saddle.hpp"
#include "mellinsphere/specfun.hpp"
#include "reference.hpp"

using namespace mellinsphere;
using namespace mellinsphere::saddle;
using specfun::euler_constant;

namespace {

// Independent values: minimizer of Gamma and the root of lnGamma(g) = g psi(g),
// both to 40 digits.
constexpr double kGammaMin = 1.4616321449683623412;
constexpr double kGammaMinValue = 0.88560319441088870028;
constexpr double kGammaCr = 1.376610918646214626;
constexpr double kLambdaCr = 0.917923534737975314;

double reference_inverse_digamma(double y)
{
    double lo = 1e-12;
    double hi = std::max(2.0, std::exp(y) + 1.0);
    return reference::bisect([y](double g) { return reference::digamma(g) - y; }, lo, hi);
}

} // namespace

TEST_CASE("inverse_digamma examples")
{
    CHECK(std::abs(inverse_digamma(-euler_constant) - 1.0) < 1e-11);
    CHECK(std::abs(inverse_digamma(0.0) - kGammaMin) < 1e-11);
    CHECK(std::abs(inverse_digamma(1.0 - euler_constant) - 2.0) < 1e-11);
    CHECK(std::abs(inverse_digamma(0.0) - reference_inverse_digamma(0.0)) < 1e-11);
}

TEST_CASE("inverse_digamma residual across the range")
{
    for (double y : {-1e6, -1e3, -50.0, -2.3, -2.22, -2.21, -1.0, 0.0, 1.0, 5.0, 20.0, 300.0}) {
        const double g = inverse_digamma(y);
        INFO("y = " << y);
        CHECK(g > 0.0);
        CHECK(std::abs(specfun::digamma(g) - y) < 1e-12 * std::max(1.0, std::abs(y)));
    }
    CHECK_THROWS_AS((void)inverse_digamma(std::nan("")), DomainError);
    CHECK_THROWS_AS((void)inverse_digamma(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("solve_saddle examples")
{
    const auto one = solve_saddle(1.0);
    CHECK(std::abs(one.gamma - kGammaMin) < 1e-10);
    CHECK(std::abs(one.ln_L - std::log(kGammaMinValue)) < 1e-12);
    CHECK(one.sigma == specfun::trigamma(one.gamma));

    const auto two = solve_saddle(std::exp(1.0 - euler_constant));
    CHECK(std::abs(two.gamma - 2.0) < 1e-10);

    const auto big = solve_saddle(1e6);
    CHECK(std::abs(big.gamma - 1e6 - 0.5) < 1e-5);

    for (double bad : {0.0, -1.0, std::nan("")}) {
        CHECK_THROWS_AS((void)solve_saddle(bad), DomainError);
        CHECK_THROWS_AS((void)L_value(bad), DomainError);
        CHECK_THROWS_AS((void)L_value_legendre(bad), DomainError);
    }
}

TEST_CASE("solve_saddle against an independent bisection")
{
    struct Row {
        double lambda, gamma, ln_L;
    };
    // 40-digit reference values.
    const std::vector<Row> rows = {
        {0.5, 0.9330126182815946, 0.6891980835604353},
        {2.0, 2.4796874504281787, -1.4482869063238164},
        {1e-6, 0.07487749327735938, 3.5876033697565574},
        {0.01, 0.22971839846991753, 2.4353828026999557},
        {100.0, 100.49958333802057, -101.38406322489359},
    };
    for (const auto& row : rows) {
        const auto s = solve_saddle(row.lambda);
        INFO("lambda = " << row.lambda);
        CHECK(reference::close(s.gamma, row.gamma, 1e-10));
        CHECK(reference::close(s.ln_L, row.ln_L, 1e-10));
        CHECK(reference::close(s.gamma, reference_inverse_digamma(std::log(row.lambda)), 1e-10));
    }
    CHECK(std::abs(solve_saddle(1e-8).gamma - 0.05576735219090602) < 1e-12);
    CHECK(std::abs(solve_saddle(1e4).gamma - 10000.499995833333) < 1e-8);
    CHECK(std::abs(solve_saddle(0.5).sigma - 1.821907560827865) < 1e-10);
    CHECK(std::abs(solve_saddle(2.0).sigma - 0.4952022967525195) < 1e-10);
}

TEST_CASE("SaddleSolution invariants")
{
    for (double lambda : reference::log_grid(1e-6, 1e4, 200)) {
        const auto s = solve_saddle(lambda);
        INFO("lambda = " << lambda);
        CHECK(s.lambda == lambda);
        CHECK(std::abs(specfun::digamma(s.gamma) - std::log(lambda)) < 1e-11 * std::max(1.0, std::abs(std::log(lambda))));
        CHECK(s.ln_L == specfun::ln_gamma(s.gamma) - s.gamma * std::log(lambda));
        CHECK(s.sigma == specfun::trigamma(s.gamma));
        CHECK(s.sigma > 0.0);
        CHECK(L_value(lambda).ln() == s.ln_L);
    }
}

TEST_CASE("L_value examples")
{
    CHECK(std::abs(L_value(1.0).ln() - (-0.12148629053584961)) < 1e-12);
    const double lambda = 50.0;
    CHECK(std::abs(L_value(lambda).ln() + lambda - 0.5 * std::log(2 * std::numbers::pi / lambda)) < 2e-3);
    const auto cp = critical_point();
    CHECK(std::abs(L_value(cp.lambda_cr).ln()) < 1e-10);
}

TEST_CASE("Legendre route")
{
    for (double lambda : {1.0, 0.5}) {
        CHECK(std::abs(L_value_legendre(lambda).ln() - L_value(lambda).ln()) < 1e-9);
    }
    for (double lambda : reference::log_grid(1e-6, 1e4, 120)) {
        const auto minimum = legendre_minimum(lambda);
        const auto s = solve_saddle(lambda);
        INFO("lambda = " << lambda);
        CHECK(std::abs(minimum.ln_L - s.ln_L) < 1e-9);
        CHECK(std::abs(minimum.gamma - s.gamma) < 1e-7 * std::max(1.0, s.gamma));
    }
}

TEST_CASE("critical point")
{
    const auto cp = critical_point();
    CHECK(cp.gamma_cr >= 1.37);
    CHECK(cp.gamma_cr <= 1.39);
    CHECK(std::abs(cp.gamma_cr - kGammaCr) < 1e-12);
    CHECK(std::abs(cp.lambda_cr - kLambdaCr) < 1e-12);
    CHECK(cp.lambda_cr == std::exp(specfun::digamma(cp.gamma_cr)));
    CHECK(std::abs(cp.residual) < 1e-12);
    CHECK(std::abs(specfun::ln_gamma(cp.gamma_cr) - cp.gamma_cr * specfun::digamma(cp.gamma_cr)) < 1e-12);

    auto h = [](double g) { return specfun::ln_gamma(g) - g * specfun::digamma(g); };
    CHECK(std::abs(h(1.0) - euler_constant) < 1e-14);
    CHECK(std::abs(h(2.0) - (2 * euler_constant - 2)) < 1e-14);
    double previous = h(1.0);
    for (int i = 1; i < 100; ++i) {
        const double value = h(1.0 + i / 99.0);
        CHECK(value < previous);
        previous = value;
    }
}

TEST_CASE("gamma_asymptotic_zero")
{
    CHECK(std::abs(gamma_asymptotic_zero(0.01) - 0.24826496792973859) < 1e-12);
    CHECK(std::abs(gamma_asymptotic_zero(1e-8) - 0.05604292639180563) < 1e-12);
    // The approximation improves as lambda -> 0.
    double previous = 1.0;
    for (double lambda : {1e-2, 1e-4, 1e-8, 1e-16, 1e-32}) {
        const double relative = std::abs(gamma_asymptotic_zero(lambda) / solve_saddle(lambda).gamma - 1.0);
        CHECK(relative < previous);
        previous = relative;
    }
    for (double bad : {1.0, 2.0, 0.0, -1.0, 0.6}) {
        CHECK_THROWS_AS((void)gamma_asymptotic_zero(bad), DomainError);
    }
}

TEST_CASE("tabulate")
{
    const std::vector<double> single = {1.0};
    const auto one = tabulate(single);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0].gamma - kGammaMin) < 1e-10);

    const std::vector<double> grid = {0.5, 1.0, 2.0};
    const auto rows = tabulate(grid);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].gamma < rows[1].gamma);
    CHECK(rows[1].gamma < rows[2].gamma);
    CHECK(rows[0].ln_L > rows[1].ln_L);
    CHECK(rows[1].ln_L > rows[2].ln_L);

    const std::vector<double> bad_point = {0.5, 0.0, 2.0};
    CHECK_THROWS_AS((void)tabulate(bad_point), DomainError);
    const std::vector<double> unsorted = {1.0, 0.5};
    CHECK_THROWS_AS((void)tabulate(unsorted), DomainError);

    // Order independence: each row equals the pointwise solve.
    const auto fine = reference::log_grid(1e-3, 10.0, 200);
    const auto table = tabulate(fine);
    for (std::size_t i = 0; i < fine.size(); ++i) {
        const auto s = solve_saddle(fine[i]);
        CHECK(table[i].gamma == s.gamma);
        CHECK(table[i].ln_L == s.ln_L);
    }
}

TEST_CASE("property: round trip exp(digamma(inverse_digamma(ln lambda))) = lambda")
{
    for (double lambda : reference::log_grid(1e-6, 1e4, 1000)) {
        const double back = std::exp(specfun::digamma(inverse_digamma(std::log(lambda))));
        CHECK(std::abs(back / lambda - 1.0) < 1e-10);
    }
}

TEST_CASE("property: envelope identity d lnL / d ln lambda = -gamma")
{
    const double h = 1e-5;
    for (double lambda : reference::log_grid(1e-3, 1e3, 100)) {
        const double x = std::log(lambda);
        const double derivative = (L_value(std::exp(x + h)).ln() - L_value(std::exp(x - h)).ln()) / (2 * h);
        INFO("lambda = " << lambda);
        CHECK(std::abs(derivative + solve_saddle(lambda).gamma) < 1e-5 * std::max(1.0, solve_saddle(lambda).gamma));
    }
}

TEST_CASE("property: route agreement and monotonicity on a grid")
{
    const auto grid = reference::log_grid(1e-6, 1e4, 300);
    double previous_gamma = 0.0;
    double previous_ln_L = std::numeric_limits<double>::infinity();
    for (double lambda : grid) {
        const auto s = solve_saddle(lambda);
        CHECK(std::abs(L_value_legendre(lambda).ln() - s.ln_L) < 1e-9);
        CHECK(s.gamma > previous_gamma);
        CHECK(s.ln_L < previous_ln_L);
        previous_gamma = s.gamma;
        previous_ln_L = s.ln_L;
    }
}

TEST_CASE("property: large-lambda half shift")
{
    // Beyond ~1e5 the bound 1/lambda falls below the spacing of doubles near gamma.
    for (double lambda : reference::log_grid(100.0, 1e5, 50)) {
        CHECK(std::abs(solve_saddle(lambda).gamma - lambda - 0.5) < 1.0 / lambda);
    }
}

TEST_CASE("property: small-lambda forms")
{
    // ln L - (1 + ln(|ln lambda| - C)) shrinks along lambda = 1e-3 .. 1e-8.
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 3; k <= 8; ++k) {
        const double lambda = std::pow(10.0, -k);
        const double defect = L_value(lambda).ln() - (1.0 + std::log(std::abs(std::log(lambda)) - euler_constant));
        INFO("lambda = " << lambda);
        CHECK(std::abs(defect) < previous);
        previous = std::abs(defect);
    }
    // lambda(gamma) ~ exp(-C - 1/gamma): the relative error shrinks as gamma -> 0.
    double previous_error = std::numeric_limits<double>::infinity();
    for (double g : {0.2, 0.1, 0.05, 0.02}) {
        const double lambda = std::exp(specfun::digamma(g));
        const double error = std::abs(std::log(lambda) - (-euler_constant - 1.0 / g));
        CHECK(error < previous_error);
        previous_error = error;
    }
    // Exact L(0.01) is far from C / lambda.
    CHECK(std::abs(std::exp(L_value(0.01).ln()) - 11.4198) < 0.01);
}
