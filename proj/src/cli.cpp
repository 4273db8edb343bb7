#include "mellinsphere/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "mellinsphere/fn_oracles.hpp"
#include "mellinsphere/hypersphere.hpp"
#include "mellinsphere/report.hpp"
#include "mellinsphere/saddle.hpp"

namespace mellinsphere::cli {

namespace {

using report::format_number;

struct GridSpec {
    double min = 1e-3;
    double max = 10.0;
    int count = 200;
    bool log = true;
};

struct RunConfig {
    GridSpec grid;
    std::optional<double> lambda;
    int n = 2;
    std::string method = "contour";
    double tol = 1e-10;
    std::int64_t samples = 0;
    std::uint64_t seed = 1;
    double theta = 1.0;
    double radius_c = 1.0;
    double radius_alpha = 0.0;
    bool pinned_critical = false;
    std::optional<double> epsilon;
    std::vector<double> f{1.0};
    std::vector<int> n_grid{5, 10, 20, 40};
    std::string in_path;
    std::string out_path;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<double> make_grid(const GridSpec& grid)
{
    if (!(grid.min < grid.max) || grid.count < 2) {
        throw UsageError("grid requires --grid-min < --grid-max and --grid-count >= 2");
    }
    if (grid.log && !(grid.min > 0.0)) {
        throw UsageError("log grid requires --grid-min > 0");
    }
    std::vector<double> points(static_cast<std::size_t>(grid.count));
    for (int i = 0; i < grid.count; ++i) {
        const double u = static_cast<double>(i) / (grid.count - 1);
        points[static_cast<std::size_t>(i)] =
            grid.log ? std::exp(std::log(grid.min) + u * (std::log(grid.max) - std::log(grid.min)))
                     : grid.min + u * (grid.max - grid.min);
    }
    points.back() = grid.max;
    return points;
}

std::vector<double> lambdas(const RunConfig& config)
{
    return config.lambda ? std::vector<double>{*config.lambda} : make_grid(config.grid);
}

double require_epsilon(const RunConfig& config)
{
    if (!config.epsilon) {
        throw UsageError("--epsilon is required (critical-band half-width)");
    }
    return *config.epsilon;
}

// Writes `body` either to --out or to the given stream.
void emit(const RunConfig& config, std::ostream& out, const std::string& body)
{
    if (config.out_path.empty()) {
        out << body;
        return;
    }
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + config.out_path + "' for writing");
    }
    file << body;
}

std::string cmd_eval(const RunConfig& config)
{
    std::ostringstream csv;
    csv << "lambda,gamma,ln_L,ln_L_legendre,sigma\n";
    for (double lambda : lambdas(config)) {
        const auto s = saddle::solve_saddle(lambda);
        csv << format_number(s.lambda) << ',' << format_number(s.gamma) << ',' << format_number(s.ln_L) << ','
            << format_number(saddle::L_value_legendre(lambda).ln()) << ',' << format_number(s.sigma) << '\n';
    }
    return csv.str();
}

std::string cmd_table(const RunConfig& config)
{
    const auto grid = lambdas(config);
    std::ostringstream csv;
    report::write_saddle_table(csv, saddle::tabulate(grid));
    return csv.str();
}

std::string cmd_critical()
{
    const auto cp = saddle::critical_point();
    std::ostringstream csv;
    csv << "gamma_cr,lambda_cr,residual\n"
        << format_number(cp.gamma_cr) << ',' << format_number(cp.lambda_cr) << ',' << format_number(cp.residual) << '\n';
    return csv.str();
}

OracleResult run_oracle(Method method, const RunConfig& config, double lambda)
{
    hypersphere::OracleSelector selector{method, config.tol, config.samples, config.seed};
    if (method == Method::monte_carlo && config.samples == 0) {
        selector.samples = 1'000'000;
    }
    try {
        return hypersphere::laplace_dn(
            {config.n, lambda, std::vector<double>(static_cast<std::size_t>(config.n), 1.0)}, selector);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string(to_string(method)) + " oracle (n=" + std::to_string(config.n) +
                                 ", lambda=" + format_number(lambda) + "): " + e.what());
    }
}

std::string cmd_oracle(const RunConfig& config)
{
    Method method{};
    try {
        method = parse_method(config.method);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    std::ostringstream csv;
    csv << "n,lambda,method,ln_F,err_est\n";
    for (double lambda : lambdas(config)) {
        const OracleResult result = run_oracle(method, config, lambda);
        csv << config.n << ',' << format_number(lambda) << ',' << to_string(method) << ','
            << format_number(result.value.ln()) << ',' << format_number(result.abs_error_estimate_of_ln) << '\n';
    }
    return csv.str();
}

std::string cmd_compare(const RunConfig& config)
{
    std::ostringstream csv;
    csv << "n,lambda,closed_form,quadrature,contour,asymptotic,monte_carlo,max_pairwise_deviation\n";
    for (double lambda : lambdas(config)) {
        const int n = config.n;
        std::optional<double> closed, quad, contour, asym, mc;
        if (n <= 2) {
            closed = run_oracle(Method::closed_form, config, lambda).value.ln();
        }
        if (n >= 2 && n <= 4) {
            quad = run_oracle(Method::quadrature, config, lambda).value.ln();
        }
        contour = run_oracle(Method::contour, config, lambda).value.ln();
        asym = run_oracle(Method::asymptotic, config, lambda).value.ln();
        if (n >= 2 && config.samples > 0) {
            mc = run_oracle(Method::monte_carlo, config, lambda).value.ln();
        }
        // Deviation is taken over the exact routes only; asymptotic and Monte
        // Carlo carry O(1/n) and statistical error respectively.
        std::vector<double> exact;
        for (const auto& v : {closed, quad, contour}) {
            if (v) {
                exact.push_back(*v);
            }
        }
        double deviation = 0.0;
        for (std::size_t i = 0; i < exact.size(); ++i) {
            for (std::size_t j = i + 1; j < exact.size(); ++j) {
                deviation = std::max(deviation, std::abs(exact[i] - exact[j]));
            }
        }
        const auto cell = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
        csv << n << ',' << format_number(lambda) << ',' << cell(closed) << ',' << cell(quad) << ',' << cell(contour)
            << ',' << cell(asym) << ',' << cell(mc) << ',' << format_number(deviation) << '\n';
    }
    return csv.str();
}

std::string cmd_regime(const RunConfig& config)
{
    const double epsilon = require_epsilon(config);
    const double lambda_cr = saddle::critical_point().lambda_cr;
    std::ostringstream csv;
    csv << "lambda_eff,lambda_cr,margin,regime\n";
    for (double lambda : lambdas(config)) {
        const auto report = hypersphere::classify_regime(lambda, epsilon);
        csv << format_number(report.lambda_eff) << ',' << format_number(lambda_cr) << ','
            << format_number(report.margin) << ',' << hypersphere::to_string(report.regime) << '\n';
    }
    return csv.str();
}

std::string cmd_ensemble(const RunConfig& config)
{
    const double epsilon = require_epsilon(config);
    const hypersphere::RadiusSchedule schedule{config.radius_c, config.radius_alpha, config.pinned_critical};
    const auto rows = hypersphere::ensemble_comparison(config.f, config.theta, schedule, config.n_grid, epsilon);
    std::ostringstream csv;
    csv << "n,lambda_eff,ln_D_over_n,regime,ln_psi_theta\n";
    for (const auto& row : rows) {
        csv << row.n << ',' << format_number(row.lambda_eff) << ',' << format_number(row.ln_D_over_n) << ','
            << hypersphere::to_string(row.regime) << ',' << format_number(row.ln_psi_theta) << '\n';
    }
    return csv.str();
}

void cmd_plot(const RunConfig& config)
{
    if (config.out_path.empty()) {
        throw UsageError("plot requires --out <directory>");
    }
    std::vector<saddle::SaddleSolution> rows;
    if (config.in_path.empty()) {
        rows = saddle::tabulate(make_grid(config.grid));
    } else {
        std::ifstream in(config.in_path);
        if (!in) {
            throw std::runtime_error("cannot open '" + config.in_path + "'");
        }
        rows = report::read_saddle_table(in);
    }
    std::vector<double> lambda, gamma, big_l;
    for (const auto& r : rows) {
        lambda.push_back(r.lambda);
        gamma.push_back(r.gamma);
        big_l.push_back(std::exp(r.ln_L));
    }
    const std::filesystem::path dir(config.out_path);
    std::filesystem::create_directories(dir);
    const auto write = [](const std::filesystem::path& path, const std::string& body) {
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot open '" + path.string() + "' for writing");
        }
        file << body;
    };
    write(dir / "lambda_of_gamma.svg",
          report::svg_line_plot(gamma, lambda, {"lambda = exp(psi(gamma))", "gamma", "lambda", false}));
    write(dir / "L_of_lambda.svg",
          report::svg_line_plot(lambda, big_l, {"L(lambda) = Gamma(gamma)/lambda^gamma", "lambda", "L", true}));
}

void add_grid_options(CLI::App* app, RunConfig& config)
{
    app->add_option("--grid-min", config.grid.min, "Smallest grid point")->capture_default_str();
    app->add_option("--grid-max", config.grid.max, "Largest grid point")->capture_default_str();
    app->add_option("--grid-count", config.grid.count, "Number of grid points")->capture_default_str();
    app->add_option("--grid-log", config.grid.log, "Log-spaced grid (true/false)")->capture_default_str();
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    CLI::App app{"Laplace transforms of invariant measures on hyperspheres: saddle-point data and F_n oracles",
                 "mellinsphere"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "Saddle solution and both routes to ln L at --lambda or over a grid");
    auto* table = app.add_subcommand("table", "CSV lambda,gamma,ln_L,sigma over a grid");
    auto* critical = app.add_subcommand("critical", "Critical point where L = 1");
    auto* oracle = app.add_subcommand("oracle", "ln F_n by one method");
    auto* compare = app.add_subcommand("compare", "ln F_n by every available method");
    auto* regime = app.add_subcommand("regime", "Regime of lambda_eff relative to lambda_cr");
    auto* ensemble = app.add_subcommand("ensemble", "ln D_n / n against ln Psi_theta under a radius schedule");
    auto* plot = app.add_subcommand("plot", "SVG plots of lambda(gamma) and L(lambda)");

    for (auto* sub : {eval, table, oracle, compare, regime, plot}) {
        add_grid_options(sub, config);
    }
    for (auto* sub : {eval, oracle, compare, regime}) {
        sub->add_option("--lambda", config.lambda, "Single evaluation point (overrides the grid)")
            ->check(CLI::PositiveNumber);
    }
    for (auto* sub : {oracle, compare}) {
        sub->add_option("--n", config.n, "Dimension n")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--tol", config.tol, "Quadrature tolerance in [1e-12, 1e-3]")
            ->capture_default_str()
            ->check(CLI::Range(1e-12, 1e-3));
        sub->add_option("--samples", config.samples, "Monte Carlo sample count (>= 10000)");
        sub->add_option("--seed", config.seed, "Monte Carlo seed")->capture_default_str();
    }
    oracle->add_option("--method", config.method, "closed-form | quadrature | contour | monte-carlo | asymptotic")
        ->capture_default_str();
    for (auto* sub : {regime, ensemble}) {
        sub->add_option("--epsilon", config.epsilon, "Critical-band half-width")->check(CLI::PositiveNumber);
    }
    ensemble->add_option("--f", config.f, "Laplace dual vector f (positive entries)")->delimiter(',');
    ensemble->add_option("--theta", config.theta, "Grand-ensemble parameter theta")->capture_default_str();
    ensemble->add_option("--radius-c", config.radius_c, "Radius schedule r_n = c n^alpha: c")->capture_default_str();
    ensemble->add_option("--radius-alpha", config.radius_alpha, "Radius schedule exponent alpha")->capture_default_str();
    ensemble->add_flag("--pinned-critical", config.pinned_critical, "Use r_n = lambda_cr / rho(f)");
    ensemble->add_option("--n-grid", config.n_grid, "Increasing list of dimensions")->delimiter(',');
    plot->add_option("--in", config.in_path, "Table CSV produced by `table` (default: compute from the grid)");
    for (auto* sub : {eval, table, critical, oracle, compare, regime, ensemble, plot}) {
        sub->add_option("--out", config.out_path, sub == plot ? "Output directory" : "Output CSV path (default stdout)");
    }

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "eval") {
            emit(config, out, cmd_eval(config));
        } else if (name == "table") {
            emit(config, out, cmd_table(config));
        } else if (name == "critical") {
            emit(config, out, cmd_critical());
        } else if (name == "oracle") {
            emit(config, out, cmd_oracle(config));
        } else if (name == "compare") {
            emit(config, out, cmd_compare(config));
        } else if (name == "regime") {
            emit(config, out, cmd_regime(config));
        } else if (name == "ensemble") {
            emit(config, out, cmd_ensemble(config));
        } else {
            cmd_plot(config);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << name << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << name << ": " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace mellinsphere::cli
