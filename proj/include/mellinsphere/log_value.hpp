#pragma once

#include <cmath>
#include <string_view>

#include "mellinsphere/errors.hpp"

namespace mellinsphere {

/// A strictly positive quantity stored as its natural logarithm.
///
/// F_n(lambda), D_n(f) and L(lambda) range over thousands of orders of
/// magnitude, so every public evaluator returns this instead of a raw double.
class LogValue {
public:
    constexpr LogValue() = default;

    explicit LogValue(double ln_value) : ln_value_(ln_value)
    {
        if (!std::isfinite(ln_value)) {
            throw NumericalError("LogValue: non-finite logarithm");
        }
    }

    [[nodiscard]] double ln() const noexcept { return ln_value_; }

    /// exp(ln); may overflow to inf or underflow to 0 outside the double range.
    [[nodiscard]] double value() const noexcept { return std::exp(ln_value_); }

    friend bool operator==(const LogValue&, const LogValue&) = default;

private:
    double ln_value_ = 0.0;
};

enum class Method { closed_form, quadrature, contour, monte_carlo, asymptotic };

[[nodiscard]] std::string_view to_string(Method method) noexcept;

/// Parses the tags produced by to_string ("closed-form", "quadrature", ...).
[[nodiscard]] Method parse_method(std::string_view name);

struct OracleResult {
    LogValue value;
    /// Claimed bound on |ln F_hat - ln F|.
    double abs_error_estimate_of_ln = 0.0;
    Method method = Method::closed_form;
};

} // namespace mellinsphere
