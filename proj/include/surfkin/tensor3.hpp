#ifndef SURFKIN_TENSOR3_HPP
#define SURFKIN_TENSOR3_HPP

// Dense algebra of vectors and second-/third-rank tensors in 3d translation
// space. Third-rank components are stored with index order (i,j,k) matching
// the triadic ordering a1 (x) a2 (x) a3.

#include <array>
#include <cmath>
#include <cstddef>

#include "surfkin/errors.hpp"

namespace surfkin {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double norm2(const Vec3& a) { return dot(a, a); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }
inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

inline constexpr Vec3 e1v() { return {1.0, 0.0, 0.0}; }
inline constexpr Vec3 e2v() { return {0.0, 1.0, 0.0}; }
inline constexpr Vec3 e3v() { return {0.0, 0.0, 1.0}; }

struct Mat3 {
    // Row-major: m[i][j] maps basis vector e_j of the source to row i.
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    static Mat3 zero() { return {}; }
    static Mat3 identity() {
        Mat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }

    Mat3& operator+=(const Mat3& o) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] += o.m[i][j];
        return *this;
    }
    Mat3& operator-=(const Mat3& o) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] -= o.m[i][j];
        return *this;
    }
    Mat3& operator*=(double s) {
        for (auto& row : m)
            for (double& v : row) v *= s;
        return *this;
    }
};

inline Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
inline Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
inline Mat3 operator-(const Mat3& a) { Mat3 r = a; return r *= -1.0; }
inline Mat3 operator*(double s, Mat3 a) { return a *= s; }
inline Mat3 operator*(Mat3 a, double s) { return a *= s; }

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
    return r;
}

inline Mat3 outer(const Vec3& a, const Vec3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
    return r;
}

inline double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

inline double det(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

inline double frob_inner(const Mat3& a, const Mat3& b) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += a(i, j) * b(i, j);
    return s;
}
inline double norm(const Mat3& a) { return std::sqrt(frob_inner(a, a)); }

inline Mat3 sym(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * (a(i, j) + a(j, i));
    return r;
}

// skw2(M) = (M - M^T)/2
inline Mat3 skw2(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * (a(i, j) - a(j, i));
    return r;
}

// wmat(u) v = u x v
inline Mat3 wmat(const Vec3& u) {
    Mat3 r;
    r(0, 1) = -u.z; r(0, 2) = u.y;
    r(1, 0) = u.z;  r(1, 2) = -u.x;
    r(2, 0) = -u.y; r(2, 1) = u.x;
    return r;
}

// Axial vector of a skew tensor W, with W v = axial(W) x v.
inline Vec3 axial(const Mat3& w, double tol = 1e-9) {
    const double defect = norm(w + transpose(w));
    const double scale = std::max(norm(w), 1.0);
    if (defect > tol * scale)
        throw NumericalError("axial: input is not skew-symmetric within tolerance");
    return {w(2, 1), w(0, 2), w(1, 0)};
}

struct MatPredicates {
    static bool symmetric(const Mat3& a, double tol = 1e-9) {
        return norm(a - transpose(a)) <= tol * std::max(norm(a), 1.0);
    }
    static bool skew(const Mat3& a, double tol = 1e-9) {
        return norm(a + transpose(a)) <= tol * std::max(norm(a), 1.0);
    }
    static bool orthogonal(const Mat3& a, double tol = 1e-9) {
        return norm(transpose(a) * a - Mat3::identity()) <= tol;
    }
    // Tangential wrt nu: annihilates nu on the right and maps into nu-perp.
    static bool tangential(const Mat3& a, const Vec3& nu, double tol = 1e-9) {
        return norm(a * nu) <= tol * std::max(norm(a), 1.0);
    }
};

// Projection onto the plane orthogonal to the unit vector nu.
inline Mat3 projector(const Vec3& nu, double tol = 1e-9) {
    if (std::abs(norm(nu) - 1.0) > tol)
        throw NumericalError("projector: direction is not a unit vector");
    return Mat3::identity() - outer(nu, nu);
}

struct Ten3 {
    std::array<double, 27> t{};

    double& operator()(int i, int j, int k) { return t[static_cast<std::size_t>(9 * i + 3 * j + k)]; }
    double operator()(int i, int j, int k) const { return t[static_cast<std::size_t>(9 * i + 3 * j + k)]; }

    static Ten3 zero() { return {}; }

    Ten3& operator+=(const Ten3& o) {
        for (std::size_t n = 0; n < 27; ++n) t[n] += o.t[n];
        return *this;
    }
    Ten3& operator-=(const Ten3& o) {
        for (std::size_t n = 0; n < 27; ++n) t[n] -= o.t[n];
        return *this;
    }
    Ten3& operator*=(double s) {
        for (double& v : t) v *= s;
        return *this;
    }
};

inline Ten3 operator+(Ten3 a, const Ten3& b) { return a += b; }
inline Ten3 operator-(Ten3 a, const Ten3& b) { return a -= b; }
inline Ten3 operator*(double s, Ten3 a) { return a *= s; }

inline Ten3 triad(const Vec3& a, const Vec3& b, const Vec3& c) {
    Ten3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r(i, j, k) = a[i] * b[j] * c[k];
    return r;
}

// Second-rank tensor tensored with a trailing vector: (A (x) c)_ijk = A_ij c_k.
inline Ten3 outer(const Mat3& a, const Vec3& c) {
    Ten3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r(i, j, k) = a(i, j) * c[k];
    return r;
}

// Leading vector tensored with a second-rank tensor: (a (x) B)_ijk = a_i B_jk.
inline Ten3 outer(const Vec3& a, const Mat3& b) {
    Ten3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r(i, j, k) = a[i] * b(j, k);
    return r;
}

inline double norm2(const Ten3& t) {
    double s = 0.0;
    for (double v : t.t) s += v * v;
    return s;
}
inline double norm(const Ten3& t) { return std::sqrt(norm2(t)); }

// skw on the last two slots: 2 skw(a1 (x) a2 (x) a3) = a1 (x) a2 (x) a3 - a1 (x) a3 (x) a2.
inline Ten3 skw3(const Ten3& t) {
    Ten3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r(i, j, k) = 0.5 * (t(i, j, k) - t(i, k, j));
    return r;
}

// A o T = A_ij T_ijk e_k
inline Vec3 circ_mt(const Mat3& a, const Ten3& t) {
    Vec3 r;
    double* out[3] = {&r.x, &r.y, &r.z};
    for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += a(i, j) * t(i, j, k);
        *out[k] = s;
    }
    return r;
}

// T o A = T_ijk A_jk e_i
inline Vec3 circ_tm(const Ten3& t, const Mat3& a) {
    Vec3 r;
    double* out[3] = {&r.x, &r.y, &r.z};
    for (int i = 0; i < 3; ++i) {
        double s = 0.0;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) s += t(i, j, k) * a(j, k);
        *out[i] = s;
    }
    return r;
}

// (T o a)_ij = T_ikj a_k
inline Mat3 circ_tv(const Ten3& t, const Vec3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += t(i, k, j) * a[k];
            r(i, j) = s;
        }
    return r;
}

} // namespace surfkin

#endif
