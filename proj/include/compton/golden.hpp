#pragma once

#include <cmath>

namespace compton {

// Golden-section minimization of a unimodal function on [a, b].
// Returns the abscissa of the minimum to within tol.
template <class F>
double golden_minimize(F f, double a, double b, double tol = 1e-10) {
    constexpr double invphi = 0.6180339887498949;  // 1/phi
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

template <class F>
double golden_maximize(F f, double a, double b, double tol = 1e-10) {
    return golden_minimize([&](double x) { return -f(x); }, a, b, tol);
}

} // namespace compton
