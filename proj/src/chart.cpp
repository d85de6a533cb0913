#include "surfkin/chart.hpp"

#include <cmath>

#include "surfkin/errors.hpp"

namespace surfkin {

namespace {

constexpr double kImmersionTol = 1e-12;

ChartJet revolution_jet(const ProfileFn& profile, double theta, double z) {
    const Dual2 rho = profile(z);
    if (rho.v <= 0.0) throw ProfileError("revolution profile must be positive on the z-range");
    const double ct = std::cos(theta), st = std::sin(theta);
    ChartJet j;
    j.r = {rho.v * ct, rho.v * st, z};
    j.r_u = {-rho.v * st, rho.v * ct, 0.0};
    j.r_v = {rho.d * ct, rho.d * st, 1.0};
    j.r_uu = {-rho.v * ct, -rho.v * st, 0.0};
    j.r_uv = {-rho.d * st, rho.d * ct, 0.0};
    j.r_vv = {rho.dd * ct, rho.dd * st, 0.0};
    return j;
}

} // namespace

Chart make_plane(double u0, double u1, double v0, double v1) {
    return Chart(ChartKind::Plane, {u0, u1, v0, v1},
                 [](double u, double v) {
                     ChartJet j;
                     j.r = {u, v, 0.0};
                     j.r_u = {1.0, 0.0, 0.0};
                     j.r_v = {0.0, 1.0, 0.0};
                     return j;
                 },
                 "plane");
}

Chart make_planar_annulus(double r0, double r1, double theta0, double theta1) {
    if (r0 <= 0.0) throw ConfigError("annulus inner radius must be positive");
    return Chart(ChartKind::PlanarAnnulus, {r0, r1, theta0, theta1},
                 [](double r, double t) {
                     const double c = std::cos(t), s = std::sin(t);
                     ChartJet j;
                     j.r = {r * c, r * s, 0.0};
                     j.r_u = {c, s, 0.0};
                     j.r_v = {-r * s, r * c, 0.0};
                     j.r_uv = {-s, c, 0.0};
                     j.r_vv = {-r * c, -r * s, 0.0};
                     return j;
                 },
                 "annulus");
}

Chart make_sphere(double radius, Domain dom) {
    if (radius <= 0.0) throw ConfigError("sphere radius must be positive");
    return Chart(ChartKind::Sphere, dom,
                 [radius](double u, double v) {
                     const double su = std::sin(u), cu = std::cos(u);
                     const double sv = std::sin(v), cv = std::cos(v);
                     ChartJet j;
                     j.r = radius * Vec3{su * cv, su * sv, cu};
                     j.r_u = radius * Vec3{cu * cv, cu * sv, -su};
                     j.r_v = radius * Vec3{-su * sv, su * cv, 0.0};
                     j.r_uu = radius * Vec3{-su * cv, -su * sv, -cu};
                     j.r_uv = radius * Vec3{-cu * sv, cu * cv, 0.0};
                     j.r_vv = radius * Vec3{-su * cv, -su * sv, 0.0};
                     return j;
                 },
                 "sphere");
}

Chart make_cylinder(double radius, double zmin, double zmax) {
    ProfileFn p = [radius](double) { return Dual2::constant(radius); };
    Chart c = make_revolution(std::move(p), zmin, zmax, 0.0, 3.0, "cylinder");
    return Chart(ChartKind::Cylinder, c.domain(),
                 [c](double u, double v) { return c.jet(u, v); }, "cylinder");
}

Chart make_catenoid(double zmin, double zmax) {
    ProfileFn p = [](double z) { return cosh(Dual2::variable(z)); };
    Chart c = make_revolution(std::move(p), zmin, zmax, 0.0, 3.0, "catenoid");
    return Chart(ChartKind::Catenoid, c.domain(),
                 [c](double u, double v) { return c.jet(u, v); }, "catenoid");
}

Chart make_helicoid(double zmin, double zmax) {
    return Chart(ChartKind::Helicoid, {0.0, 3.0, zmin, zmax},
                 [](double theta, double z) {
                     const double ct = std::cos(theta), st = std::sin(theta);
                     const double sh = std::sinh(z), ch = std::cosh(z);
                     ChartJet j;
                     j.r = {sh * ct, sh * st, theta};
                     j.r_u = {-sh * st, sh * ct, 1.0};
                     j.r_v = {ch * ct, ch * st, 0.0};
                     j.r_uu = {-sh * ct, -sh * st, 0.0};
                     j.r_uv = {-ch * st, ch * ct, 0.0};
                     j.r_vv = {sh * ct, sh * st, 0.0};
                     return j;
                 },
                 "helicoid");
}

Chart make_torus(double major, double minor) {
    if (minor <= 0.0 || major <= minor)
        throw ConfigError("torus requires 0 < minor < major radius");
    return Chart(ChartKind::Torus, {0.0, 3.0, 0.0, 3.0},
                 [major, minor](double u, double v) {
                     const double cu = std::cos(u), su = std::sin(u);
                     const double cv = std::cos(v), sv = std::sin(v);
                     const double w = major + minor * cv;
                     ChartJet j;
                     j.r = {w * cu, w * su, minor * sv};
                     j.r_u = {-w * su, w * cu, 0.0};
                     j.r_v = {-minor * sv * cu, -minor * sv * su, minor * cv};
                     j.r_uu = {-w * cu, -w * su, 0.0};
                     j.r_uv = {minor * sv * su, -minor * sv * cu, 0.0};
                     j.r_vv = {-minor * cv * cu, -minor * cv * su, -minor * sv};
                     return j;
                 },
                 "torus");
}

Chart make_revolution(ProfileFn profile, double zmin, double zmax,
                      double theta0, double theta1, std::string name) {
    return Chart(ChartKind::Revolution, {theta0, theta1, zmin, zmax},
                 [profile = std::move(profile)](double u, double v) {
                     return revolution_jet(profile, u, v);
                 },
                 std::move(name));
}

TangentBasis tangent_basis(const ChartJet& jet) {
    TangentBasis tb;
    tb.r_u = jet.r_u;
    tb.r_v = jet.r_v;
    tb.len_u = norm(jet.r_u);
    tb.len_v = norm(jet.r_v);
    const Vec3 n = cross(jet.r_u, jet.r_v);
    const double nn = norm(n);
    if (tb.len_u < kImmersionTol || tb.len_v < kImmersionTol || nn < kImmersionTol * tb.len_u * tb.len_v)
        throw ImmersionError("degenerate tangent vectors: chart is not an immersion here");
    tb.e_u = jet.r_u / tb.len_u;
    tb.e_v = jet.r_v / tb.len_v;
    tb.nu = n / nn;
    tb.ortho_defect = std::abs(dot(tb.e_u, tb.e_v));

    const double g11 = dot(jet.r_u, jet.r_u);
    const double g12 = dot(jet.r_u, jet.r_v);
    const double g22 = dot(jet.r_v, jet.r_v);
    const double dg = g11 * g22 - g12 * g12;
    tb.g_u = (g22 * jet.r_u - g12 * jet.r_v) / dg;
    tb.g_v = (g11 * jet.r_v - g12 * jet.r_u) / dg;
    return tb;
}

ChartSample sample(const Chart& chart, double u, double v) {
    ChartSample s;
    s.u = u;
    s.v = v;
    s.jet = chart.jet(u, v);
    s.basis = tangent_basis(s.jet);
    s.P = Mat3::identity() - outer(s.basis.nu, s.basis.nu);

    // exact normal derivatives from the 2-jet
    const Vec3 n = cross(s.jet.r_u, s.jet.r_v);
    const double nn = norm(n);
    const Vec3 n_u = cross(s.jet.r_uu, s.jet.r_v) + cross(s.jet.r_u, s.jet.r_uv);
    const Vec3 n_v = cross(s.jet.r_uv, s.jet.r_v) + cross(s.jet.r_u, s.jet.r_vv);
    const Vec3 nu_u = (s.P * n_u) / nn;
    const Vec3 nu_v = (s.P * n_v) / nn;
    s.dsnu = pullback_gradient(s.basis, nu_u, nu_v);

    // eigen-decomposition in a tangent orthonormal basis (2x2 symmetric)
    const Vec3 t1 = s.basis.e_u;
    Vec3 t2 = s.basis.e_v - dot(s.basis.e_v, t1) * t1;
    const double t2n = norm(t2);
    if (t2n < kImmersionTol) throw ImmersionError("tangent basis collapsed");
    t2 = t2 / t2n;
    const Mat3 sym_dsnu = sym(s.dsnu);
    const double a = dot(t1, sym_dsnu * t1);
    const double b = dot(t1, sym_dsnu * t2);
    const double c = dot(t2, sym_dsnu * t2);
    const double mean = 0.5 * (a + c);
    const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    s.kappa1 = mean + disc;
    s.kappa2 = mean - disc;
    const double phi = 0.5 * std::atan2(2.0 * b, a - c);
    Vec3 p1 = std::cos(phi) * t1 + std::sin(phi) * t2;
    // deterministic pointwise sign; grid sweeps re-fix by row continuity
    if (dot(p1, t1) < 0.0 || (std::abs(dot(p1, t1)) < 1e-12 && dot(p1, t2) < 0.0)) p1 = -p1;
    s.p1 = p1;
    s.p2 = cross(s.basis.nu, p1);
    s.H = mean;
    s.K = s.kappa1 * s.kappa2;
    s.umbilic = std::abs(s.kappa1 - s.kappa2) <
                1e-7 * std::max({std::abs(s.kappa1), std::abs(s.kappa2), 1.0});
    return s;
}

namespace {

struct Steps {
    double hu, hv;
};

Steps steps_for(const Chart& chart, const FdOptions& fd) {
    return {fd.rel_step * chart.domain().span_u(), fd.rel_step * chart.domain().span_v()};
}

} // namespace

Vec3 surface_gradient_scalar(const Chart& chart, const ScalarField& f, double u, double v,
                             const FdOptions& fd, bool allow_general, double ortho_tol) {
    const TangentBasis tb = tangent_basis(chart.jet(u, v));
    const auto [hu, hv] = steps_for(chart, fd);
    const double f_u = fd_derivative([&](double x) { return f(x, v); }, u, hu, fd.richardson);
    const double f_v = fd_derivative([&](double x) { return f(u, x); }, v, hv, fd.richardson);
    if (tb.ortho_defect <= ortho_tol)
        return (f_u / tb.len_u) * tb.e_u + (f_v / tb.len_v) * tb.e_v;
    if (!allow_general)
        throw NumericalError("surface_gradient_scalar: chart is not orthogonal at this point");
    return pullback_gradient(tb, f_u, f_v);
}

Mat3 surface_gradient_vector(const Chart& chart, const VectorField& w, double u, double v,
                             const FdOptions& fd) {
    const TangentBasis tb = tangent_basis(chart.jet(u, v));
    const auto [hu, hv] = steps_for(chart, fd);
    const Vec3 w_u = fd_derivative([&](double x) { return w(x, v); }, u, hu, fd.richardson);
    const Vec3 w_v = fd_derivative([&](double x) { return w(u, x); }, v, hv, fd.richardson);
    return pullback_gradient(tb, w_u, w_v);
}

Vec3 surface_curl(const Chart& chart, const VectorField& w, double u, double v,
                  const FdOptions& fd) {
    const Mat3 g = surface_gradient_vector(chart, w, u, v, fd);
    const Mat3 two_skw = g - transpose(g);
    return {two_skw(2, 1), two_skw(0, 2), two_skw(1, 0)};
}

double surface_divergence(const Chart& chart, const VectorField& w, double u, double v,
                          const FdOptions& fd) {
    return trace(surface_gradient_vector(chart, w, u, v, fd));
}

double surface_laplacian(const Chart& chart, const ScalarField& f, double u, double v,
                         const FdOptions& fd) {
    FdOptions inner = fd;
    inner.rel_step = 0.1 * fd.rel_step;  // keep inner noise below the outer truncation
    VectorField grad = [&](double uu, double vv) {
        return surface_gradient_scalar(chart, f, uu, vv, inner);
    };
    FdOptions outer = fd;
    outer.rel_step = 10.0 * fd.rel_step;
    return surface_divergence(chart, grad, u, v, outer);
}

double metric_gaussian_curvature(const Chart& chart, double u, double v,
                                 const FdOptions& fd, double ortho_tol) {
    const TangentBasis tb = tangent_basis(chart.jet(u, v));
    if (tb.ortho_defect > ortho_tol)
        throw NumericalError("metric_gaussian_curvature requires orthogonal coordinates");

    // metric elements and their exact first derivatives
    auto len_u = [&](double uu, double vv) { return norm(chart.jet(uu, vv).r_u); };
    auto len_v = [&](double uu, double vv) { return norm(chart.jet(uu, vv).r_v); };
    auto du_len_v = [&](double uu, double vv) {
        const ChartJet j = chart.jet(uu, vv);
        return dot(j.r_v, j.r_uv) / norm(j.r_v);
    };
    auto dv_len_u = [&](double uu, double vv) {
        const ChartJet j = chart.jet(uu, vv);
        return dot(j.r_u, j.r_uv) / norm(j.r_u);
    };

    const auto [hu, hv] = steps_for(chart, fd);
    const double term_u = fd_derivative(
        [&](double x) { return du_len_v(x, v) / len_u(x, v); }, u, hu, fd.richardson);
    const double term_v = fd_derivative(
        [&](double x) { return dv_len_u(u, x) / len_v(u, x); }, v, hv, fd.richardson);
    return -(term_u + term_v) / (tb.len_u * tb.len_v);
}

} // namespace surfkin
