#include "mellinsphere/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace mellinsphere::report {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kMargin = 60.0;

std::string fixed(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
    return buffer;
}

std::string tick_label(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3g", value);
    return buffer;
}

std::string escape(const std::string& text)
{
    std::string result;
    for (char c : text) {
        switch (c) {
        case '<': result += "&lt;"; break;
        case '>': result += "&gt;"; break;
        case '&': result += "&amp;"; break;
        default: result += c;
        }
    }
    return result;
}

} // namespace

std::string format_number(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.16e", value);
    return buffer;
}

void write_saddle_table(std::ostream& out, std::span<const saddle::SaddleSolution> rows)
{
    out << "lambda,gamma,ln_L,sigma\n";
    for (const auto& row : rows) {
        out << format_number(row.lambda) << ',' << format_number(row.gamma) << ',' << format_number(row.ln_L) << ','
            << format_number(row.sigma) << '\n';
    }
}

std::vector<saddle::SaddleSolution> read_saddle_table(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != "lambda,gamma,ln_L,sigma") {
        throw DomainError("saddle table: missing header 'lambda,gamma,ln_L,sigma'");
    }
    std::vector<saddle::SaddleSolution> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string cell;
        double values[4];
        for (double& v : values) {
            if (!std::getline(fields, cell, ',')) {
                throw DomainError("saddle table: expected 4 columns in '" + line + "'");
            }
            try {
                std::size_t used = 0;
                v = std::stod(cell, &used);
                if (used != cell.size()) {
                    throw std::invalid_argument(cell);
                }
            } catch (const std::exception&) {
                throw DomainError("saddle table: bad number '" + cell + "'");
            }
        }
        rows.push_back({values[0], values[1], values[2], values[3]});
    }
    return rows;
}

std::string svg_line_plot(std::span<const double> x, std::span<const double> y, const PlotSpec& spec)
{
    detail::require(x.size() == y.size() && x.size() >= 2, "svg_line_plot: need at least two (x, y) points");
    std::vector<double> xs(x.begin(), x.end());
    if (spec.log_x) {
        for (double& v : xs) {
            detail::require(v > 0.0, "svg_line_plot: log x axis needs positive x");
            v = std::log10(v);
        }
    }
    const auto [x_lo_it, x_hi_it] = std::minmax_element(xs.begin(), xs.end());
    const auto [y_lo_it, y_hi_it] = std::minmax_element(y.begin(), y.end());
    const double x_lo = *x_lo_it;
    const double x_hi = *x_hi_it > x_lo ? *x_hi_it : x_lo + 1.0;
    const double y_lo = std::min(0.0, *y_lo_it);
    const double y_hi = *y_hi_it > y_lo ? *y_hi_it : y_lo + 1.0;

    const auto px = [&](double v) { return kMargin + (v - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); };
    const auto py = [&](double v) { return kHeight - kMargin - (v - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << escape(spec.title)
        << "</text>\n";

    // Axes with five ticks each.
    const std::string x0 = fixed(kMargin), x1 = fixed(kWidth - kMargin);
    const std::string y0 = fixed(kHeight - kMargin), y1 = fixed(kMargin);
    svg << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1 << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x_lo + (x_hi - x_lo) * i / 4.0;
        const double yv = y_lo + (y_hi - y_lo) * i / 4.0;
        svg << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << fixed(kHeight - kMargin + 18)
            << "\" text-anchor=\"middle\" font-size=\"11\">" << tick_label(spec.log_x ? std::pow(10.0, xv) : xv)
            << "</text>\n"
            << "<text x=\"" << fixed(kMargin - 6) << "\" y=\"" << fixed(py(yv) + 4)
            << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(yv) << "</text>\n";
    }
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\" font-size=\"13\">"
        << escape(spec.x_label) << "</text>\n"
        << "<text x=\"16\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
        << kHeight / 2 << ")\">" << escape(spec.y_label) << "</text>\n";

    svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        svg << (i ? " " : "") << fixed(px(xs[i])) << ',' << fixed(py(y[i]));
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

} // namespace mellinsphere::report
