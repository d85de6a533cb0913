#ifndef SURFKIN_FD_HPP
#define SURFKIN_FD_HPP

// Central finite differences in chart parameter space, with optional
// one-level Richardson extrapolation. Works for any value type with
// subtraction and scalar multiplication (double, Vec3, Mat3, ...).

#include <utility>

namespace surfkin {

struct FdOptions {
    double rel_step = 1e-4;   // step as a fraction of the domain span
    bool richardson = true;   // one-level extrapolation of the h^2 error term
};

template <class F>
auto central_d(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) * (1.0 / (2.0 * h));
}

template <class F>
auto fd_derivative(F&& f, double x, double h, bool richardson) {
    auto d1 = central_d(f, x, h);
    if (!richardson) return d1;
    auto d2 = central_d(f, x, 0.5 * h);
    return (4.0 * d2 - d1) * (1.0 / 3.0);
}

} // namespace surfkin

#endif
