#ifndef SURFKIN_QUAT_HPP
#define SURFKIN_QUAT_HPP

// Unit quaternions for rotation construction and the swing-twist split.

#include <cmath>

#include "surfkin/tensor3.hpp"

namespace surfkin {

struct Quat {
    double w = 1.0;
    Vec3 v{};

    static Quat identity() { return {}; }

    static Quat from_axis_angle(const Vec3& axis, double angle) {
        const Vec3 n = normalized(axis);
        return {std::cos(0.5 * angle), std::sin(0.5 * angle) * n};
    }
};

inline Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - dot(a.v, b.v), a.w * b.v + b.w * a.v + cross(a.v, b.v)};
}

inline Quat conjugate(const Quat& q) { return {q.w, -q.v}; }

inline double norm(const Quat& q) { return std::sqrt(q.w * q.w + norm2(q.v)); }

inline Quat normalized(const Quat& q) {
    const double n = norm(q);
    return {q.w / n, q.v / n};
}

inline Mat3 to_matrix(const Quat& q) {
    const double w = q.w, x = q.v.x, y = q.v.y, z = q.v.z;
    Mat3 r;
    r(0, 0) = 1 - 2 * (y * y + z * z);
    r(0, 1) = 2 * (x * y - w * z);
    r(0, 2) = 2 * (x * z + w * y);
    r(1, 0) = 2 * (x * y + w * z);
    r(1, 1) = 1 - 2 * (x * x + z * z);
    r(1, 2) = 2 * (y * z - w * x);
    r(2, 0) = 2 * (x * z - w * y);
    r(2, 1) = 2 * (y * z + w * x);
    r(2, 2) = 1 - 2 * (x * x + y * y);
    return r;
}

// Shepperd-style extraction; stable for any proper rotation including trace -1.
inline Quat from_matrix(const Mat3& m) {
    const double tr = trace(m);
    Quat q;
    if (tr > 0.0) {
        double s = std::sqrt(tr + 1.0) * 2.0;
        q.w = 0.25 * s;
        q.v = {(m(2, 1) - m(1, 2)) / s, (m(0, 2) - m(2, 0)) / s, (m(1, 0) - m(0, 1)) / s};
    } else if (m(0, 0) > m(1, 1) && m(0, 0) > m(2, 2)) {
        double s = std::sqrt(1.0 + m(0, 0) - m(1, 1) - m(2, 2)) * 2.0;
        q.w = (m(2, 1) - m(1, 2)) / s;
        q.v = {0.25 * s, (m(0, 1) + m(1, 0)) / s, (m(0, 2) + m(2, 0)) / s};
    } else if (m(1, 1) > m(2, 2)) {
        double s = std::sqrt(1.0 + m(1, 1) - m(0, 0) - m(2, 2)) * 2.0;
        q.w = (m(0, 2) - m(2, 0)) / s;
        q.v = {(m(0, 1) + m(1, 0)) / s, 0.25 * s, (m(1, 2) + m(2, 1)) / s};
    } else {
        double s = std::sqrt(1.0 + m(2, 2) - m(0, 0) - m(1, 1)) * 2.0;
        q.w = (m(1, 0) - m(0, 1)) / s;
        q.v = {(m(0, 2) + m(2, 0)) / s, (m(1, 2) + m(2, 1)) / s, 0.25 * s};
    }
    return normalized(q);
}

inline Mat3 rotation_about(const Vec3& axis, double angle) {
    return to_matrix(Quat::from_axis_angle(axis, angle));
}

// Swing-twist split about a unit axis: q = swing * twist, twist about `axis`.
// Both factors are well defined also where the Rodrigues vector of q blows up.
struct SwingTwist {
    Quat swing;
    Quat twist;
};

inline SwingTwist swing_twist(const Quat& q, const Vec3& axis) {
    const double p = dot(q.v, axis);
    Quat twist{q.w, p * axis};
    const double n = norm(twist);
    if (n < 1e-14) {
        // 180-degree swing orthogonal to axis; twist degenerates to identity
        twist = Quat::identity();
    } else {
        twist = {twist.w / n, twist.v / n};
    }
    const Quat swing = q * conjugate(twist);
    return {normalized(swing), twist};
}

} // namespace surfkin

#endif
