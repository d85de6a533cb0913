#ifndef SURFKIN_DUAL2_HPP
#define SURFKIN_DUAL2_HPP

// Order-2 forward-mode dual numbers: carries (f, f', f'') through arithmetic
// and the elementary functions needed by profile expressions.

#include <cmath>

#include "surfkin/errors.hpp"

namespace surfkin {

struct Dual2 {
    double v = 0.0;  // value
    double d = 0.0;  // first derivative
    double dd = 0.0; // second derivative

    static Dual2 constant(double c) { return {c, 0.0, 0.0}; }
    static Dual2 variable(double x) { return {x, 1.0, 0.0}; }
};

inline Dual2 operator+(const Dual2& a, const Dual2& b) { return {a.v + b.v, a.d + b.d, a.dd + b.dd}; }
inline Dual2 operator-(const Dual2& a, const Dual2& b) { return {a.v - b.v, a.d - b.d, a.dd - b.dd}; }
inline Dual2 operator-(const Dual2& a) { return {-a.v, -a.d, -a.dd}; }

inline Dual2 operator*(const Dual2& a, const Dual2& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d, a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd};
}

inline Dual2 operator/(const Dual2& a, const Dual2& b) {
    if (b.v == 0.0) throw ProfileError("division by zero in profile evaluation");
    const double q = a.v / b.v;
    const double q1 = (a.d - q * b.d) / b.v;
    const double q2 = (a.dd - 2.0 * q1 * b.d - q * b.dd) / b.v;
    return {q, q1, q2};
}

inline Dual2 operator+(const Dual2& a, double c) { return a + Dual2::constant(c); }
inline Dual2 operator+(double c, const Dual2& a) { return Dual2::constant(c) + a; }
inline Dual2 operator-(const Dual2& a, double c) { return a - Dual2::constant(c); }
inline Dual2 operator-(double c, const Dual2& a) { return Dual2::constant(c) - a; }
inline Dual2 operator*(const Dual2& a, double c) { return a * Dual2::constant(c); }
inline Dual2 operator*(double c, const Dual2& a) { return Dual2::constant(c) * a; }
inline Dual2 operator/(const Dual2& a, double c) { return a / Dual2::constant(c); }
inline Dual2 operator/(double c, const Dual2& a) { return Dual2::constant(c) / a; }

// Chain rule for a univariate elementary f with derivatives f', f''.
inline Dual2 lift(const Dual2& a, double f, double f1, double f2) {
    return {f, f1 * a.d, f2 * a.d * a.d + f1 * a.dd};
}

inline Dual2 sin(const Dual2& a) { return lift(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Dual2 cos(const Dual2& a) { return lift(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline Dual2 sinh(const Dual2& a) { return lift(a, std::sinh(a.v), std::cosh(a.v), std::sinh(a.v)); }
inline Dual2 cosh(const Dual2& a) { return lift(a, std::cosh(a.v), std::sinh(a.v), std::cosh(a.v)); }
inline Dual2 exp(const Dual2& a) {
    const double e = std::exp(a.v);
    return lift(a, e, e, e);
}
inline Dual2 log(const Dual2& a) {
    if (a.v <= 0.0) throw ProfileError("log of non-positive value in profile evaluation");
    return lift(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
}
inline Dual2 sqrt(const Dual2& a) {
    if (a.v < 0.0) throw ProfileError("sqrt of negative value in profile evaluation");
    if (a.v == 0.0) throw ProfileError("sqrt at zero is not differentiable");
    const double s = std::sqrt(a.v);
    return lift(a, s, 0.5 / s, -0.25 / (s * a.v));
}

inline Dual2 pow(const Dual2& a, const Dual2& b) {
    if (b.d == 0.0 && b.dd == 0.0) {
        const double p = b.v;
        if (p == std::floor(p) && std::abs(p) <= 64.0) {
            // integer exponent: valid for any base
            int n = static_cast<int>(p);
            if (n == 0) return Dual2::constant(1.0);
            bool inv = n < 0;
            n = std::abs(n);
            Dual2 r = Dual2::constant(1.0);
            Dual2 base = a;
            while (n > 0) {
                if (n & 1) r = r * base;
                base = base * base;
                n >>= 1;
            }
            return inv ? 1.0 / r : r;
        }
        if (a.v <= 0.0) throw ProfileError("pow with non-positive base and non-integer exponent");
        const double f = std::pow(a.v, p);
        return lift(a, f, p * f / a.v, p * (p - 1.0) * f / (a.v * a.v));
    }
    return exp(b * log(a));
}

} // namespace surfkin

#endif
