#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "mellinsphere/errors.hpp"

namespace mellinsphere::quadrature {

struct Estimate {
    double value = 0.0;
    double abs_error = 0.0;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes on [-1, 1]: {node, gauss weight, kronrod weight}.
inline constexpr std::array<std::array<double, 3>, 8> kGk15 = {{
    {0.000000000000000000000000000000000, 0.417959183673469387755102040816327, 0.209482141084727828012999174891714},
    {0.405845151377397166906606412076961, 0.381830050505118944950369775488975, 0.190350578064785409913256402421014},
    {0.741531185599394439863864773280788, 0.279705391489276667901467771423780, 0.140653259715525918745189590510238},
    {0.949107912342758524526189684047851, 0.129484966168869693270611432679082, 0.063092092629978553290700663189204},
    {0.207784955007898467600689403773245, 0.0, 0.204432940075298892414161999234649},
    {0.586087235467691130294144845693013, 0.0, 0.169004726639267902826583426598550},
    {0.864864423359769072789712788640926, 0.0, 0.104790010322250183839876322541518},
    {0.991455371120812639206854697526329, 0.0, 0.022935322010529224963732008058970},
}};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class Func>
Panel gk15(const Func& f, double a, double b)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double gauss = kGk15[0][1] * f0;
    double kronrod = kGk15[0][2] * f0;
    for (std::size_t i = 1; i < kGk15.size(); ++i) {
        const double dx = half * kGk15[i][0];
        const double pair = f(mid - dx) + f(mid + dx);
        gauss += kGk15[i][1] * pair;
        kronrod += kGk15[i][2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 integration of f over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(rel_tol*|I|, abs_tol). Throws ToleranceError if
/// max_panels is reached first.
template <class Func>
Estimate integrate(const Func& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                   std::size_t max_panels = 4000)
{
    if (!(b > a)) {
        return {};
    }
    std::priority_queue<detail::Panel> panels;
    panels.push(detail::gk15(f, a, b));
    double total = panels.top().value;
    double error = panels.top().error;
    while (error > std::max(rel_tol * std::abs(total), abs_tol)) {
        if (panels.size() >= max_panels) {
            throw ToleranceError("adaptive quadrature: subdivision cap reached");
        }
        const detail::Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const detail::Panel left = detail::gk15(f, worst.a, mid);
        const detail::Panel right = detail::gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    // Recompute from the panels to remove accumulated update drift.
    double value = 0.0;
    double err = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        err += panels.top().error;
        panels.pop();
    }
    return {value, err};
}

} // namespace mellinsphere::quadrature
