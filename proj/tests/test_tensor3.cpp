#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "surfkin/dual2.hpp"
#include "surfkin/quat.hpp"
#include "surfkin/tensor3.hpp"

using namespace surfkin;

namespace {

std::mt19937 rng(20260826u);

double urand() {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return d(rng);
}

Vec3 rand_vec() { return {urand(), urand(), urand()}; }

Mat3 rand_mat() {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = urand();
    return m;
}

Ten3 rand_ten() {
    Ten3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) t(i, j, k) = urand();
    return t;
}

} // namespace

TEST_CASE("matrix basics against index loops") {
    const Mat3 a = rand_mat(), b = rand_mat();
    const Vec3 v = rand_vec();

    Vec3 av{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) av[i] += a(i, j) * v[j];
    CHECK(norm(a * v - av) == doctest::Approx(0.0).epsilon(1e-14));

    Mat3 ab = Mat3::zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) ab(i, j) += a(i, k) * b(k, j);
    CHECK(norm(a * b - ab) < 1e-14);

    double fi = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) fi += a(i, j) * b(i, j);
    CHECK(frob_inner(a, b) == doctest::Approx(fi));

    CHECK(norm(sym(a) + skw2(a) - a) < 1e-15);
    CHECK(norm(transpose(sym(a)) - sym(a)) < 1e-15);
    CHECK(norm(transpose(skw2(a)) + skw2(a)) < 1e-15);
}

TEST_CASE("axial vector and cross-product matrix") {
    const Vec3 u = rand_vec(), w = rand_vec();
    CHECK(norm(wmat(u) * w - cross(u, w)) < 1e-15);
    CHECK(norm(axial(wmat(u)) - u) < 1e-15);
    // <W(u), W(w)> = 2 u . w
    CHECK(frob_inner(wmat(u), wmat(w)) == doctest::Approx(2.0 * dot(u, w)));
    CHECK_THROWS_AS((void)axial(rand_mat() + Mat3::identity()), NumericalError);
}

TEST_CASE("projector") {
    const Vec3 nu = normalized(rand_vec());
    const Mat3 P = projector(nu);
    CHECK(norm(P * nu) < 1e-15);
    CHECK(norm(P * P - P) < 1e-15);
    CHECK(trace(P) == doctest::Approx(2.0));
    CHECK_THROWS_AS((void)projector(2.0 * nu), NumericalError);
}

TEST_CASE("third-rank products against index loops") {
    const Ten3 t = rand_ten();
    const Mat3 a = rand_mat();
    const Vec3 w = rand_vec();

    Vec3 mt{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) mt[k] += a(i, j) * t(i, j, k);
    CHECK(norm(circ_mt(a, t) - mt) < 1e-14);

    Vec3 tm{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) tm[i] += t(i, j, k) * a(j, k);
    CHECK(norm(circ_tm(t, a) - tm) < 1e-14);

    Mat3 tv = Mat3::zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) tv(i, j) += t(i, k, j) * w[k];
    CHECK(norm(circ_tv(t, w) - tv) < 1e-14);
}

TEST_CASE("skw3 acts on the trailing pair of slots") {
    const Ten3 t = rand_ten();
    const Ten3 s = skw3(t);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                CHECK(s(i, j, k) == doctest::Approx(0.5 * (t(i, j, k) - t(i, k, j))));
                CHECK(s(i, j, k) == doctest::Approx(-s(i, k, j)));
            }
    CHECK(norm(skw3(s) - s) < 1e-14);
}

TEST_CASE("triads and tensor outer products") {
    const Vec3 a = rand_vec(), b = rand_vec(), c = rand_vec();
    const Ten3 t = triad(a, b, c);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(t(i, j, k) == doctest::Approx(a[i] * b[j] * c[k]));
    CHECK(norm(outer(outer(a, b), c) - t) < 1e-14);
    CHECK(norm(outer(a, outer(b, c)) - t) < 1e-14);
    // |a (x) b (x) c|^2 = |a|^2 |b|^2 |c|^2
    CHECK(norm2(t) == doctest::Approx(norm2(a) * norm2(b) * norm2(c)));
}

TEST_CASE("quaternion round trips, including half-turns") {
    for (int trial = 0; trial < 50; ++trial) {
        const Vec3 axis = normalized(rand_vec());
        const double angle = 3.14159265358979323846 * urand();
        const Quat q = Quat::from_axis_angle(axis, angle);
        const Mat3 R = to_matrix(q);
        CHECK(MatPredicates::orthogonal(R, 1e-12));
        const Quat p = from_matrix(R);
        // q and -q generate the same rotation
        const double agree = std::abs(p.w * q.w + dot(p.v, q.v));
        CHECK(agree == doctest::Approx(1.0).epsilon(1e-12));
    }
    // exact half-turn: trace = -1
    const Mat3 R = rotation_about({0.0, 0.0, 1.0}, 3.14159265358979323846);
    CHECK(trace(R) == doctest::Approx(-1.0));
    CHECK(norm(to_matrix(from_matrix(R)) - R) < 1e-14);
}

TEST_CASE("swing-twist split") {
    const Vec3 axis = normalized(Vec3{0.3, -0.2, 0.9});
    for (int trial = 0; trial < 50; ++trial) {
        const Quat q = Quat::from_axis_angle(normalized(rand_vec()), 3.0 * urand());
        const SwingTwist st = swing_twist(q, axis);
        const Quat rec = st.swing * st.twist;
        const double agree = std::abs(rec.w * q.w + dot(rec.v, q.v));
        CHECK(agree == doctest::Approx(1.0).epsilon(1e-12));
        // twist is about the axis, swing is about a direction orthogonal to it
        CHECK(norm(st.twist.v - dot(st.twist.v, axis) * axis) < 1e-12);
        CHECK(std::abs(dot(st.swing.v, axis)) < 1e-12);
    }
}

TEST_CASE("order-2 duals against analytic derivatives") {
    const double z = 0.7;
    const Dual2 x = Dual2::variable(z);

    // f = z^2 exp(z) / (1 + sin(z))
    const Dual2 f = x * x * exp(x) / (1.0 + sin(x));
    auto fval = [](double t) { return t * t * std::exp(t) / (1.0 + std::sin(t)); };
    const double h = 1e-5;
    const double f1 = (fval(z + h) - fval(z - h)) / (2 * h);
    const double f2 = (fval(z + h) - 2 * fval(z) + fval(z - h)) / (h * h);
    CHECK(f.v == doctest::Approx(fval(z)));
    CHECK(f.d == doctest::Approx(f1).epsilon(1e-8));
    CHECK(f.dd == doctest::Approx(f2).epsilon(1e-5));

    // hyperbolics and sqrt/log compositions
    const Dual2 g = sqrt(cosh(x)) + log(1.0 + x * x);
    auto gval = [](double t) { return std::sqrt(std::cosh(t)) + std::log(1.0 + t * t); };
    CHECK(g.v == doctest::Approx(gval(z)));
    CHECK(g.d == doctest::Approx((gval(z + h) - gval(z - h)) / (2 * h)).epsilon(1e-8));

    // integer and real powers
    CHECK(pow(x, Dual2::constant(3.0)).v == doctest::Approx(z * z * z));
    CHECK(pow(x, Dual2::constant(3.0)).d == doctest::Approx(3 * z * z));
    CHECK(pow(x, Dual2::constant(3.0)).dd == doctest::Approx(6 * z));
    CHECK(pow(x, Dual2::constant(0.5)).v == doctest::Approx(std::sqrt(z)));
    CHECK(pow(x, Dual2::constant(-2.0)).v == doctest::Approx(1.0 / (z * z)));

    CHECK_THROWS_AS((void)(x / Dual2::constant(0.0)), ProfileError);
    CHECK_THROWS_AS((void)log(Dual2::constant(-1.0)), ProfileError);
    CHECK_THROWS_AS((void)sqrt(Dual2::constant(-1.0)), ProfileError);
}
