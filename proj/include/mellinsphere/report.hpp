#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mellinsphere/saddle.hpp"

namespace mellinsphere::report {

/// 17 significant digits in scientific notation ("%.16e"); round-trips every double.
[[nodiscard]] std::string format_number(double value);

/// Writes `lambda,gamma,ln_L,sigma` with a header row.
void write_saddle_table(std::ostream& out, std::span<const saddle::SaddleSolution> rows);

/// Reads a table produced by write_saddle_table. Throws DomainError on malformed input.
[[nodiscard]] std::vector<saddle::SaddleSolution> read_saddle_table(std::istream& in);

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
};

/// Static SVG 1.1 document with one polyline through (x_k, y_k), plus axes and labels.
[[nodiscard]] std::string svg_line_plot(std::span<const double> x, std::span<const double> y, const PlotSpec& spec);

} // namespace mellinsphere::report
