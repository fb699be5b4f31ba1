#pragma once

#include <cmath>

namespace csusy {

/// Central 3-point first derivative.
template <class F>
double deriv1_3pt(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Central 5-point first derivative, O(h^4).
template <class F>
double deriv1_5pt(F&& f, double x, double h) {
    return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

/// Central 5-point second derivative, O(h^4).
template <class F>
double deriv2_5pt(F&& f, double x, double h) {
    return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h))
           / (12.0 * h * h);
}

} // namespace csusy
