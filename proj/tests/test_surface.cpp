#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "surfkin/chart.hpp"
#include "surfkin/frame.hpp"

using namespace surfkin;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("dual tangent basis properties") {
    const Chart torus = make_torus(2.0, 0.5);
    const ChartSample s = sample(torus, 1.1, 2.3);
    CHECK(dot(s.basis.g_u, s.basis.r_u) == doctest::Approx(1.0));
    CHECK(dot(s.basis.g_u, s.basis.r_v) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dot(s.basis.g_v, s.basis.r_v) == doctest::Approx(1.0));
    CHECK(std::abs(dot(s.basis.g_u, s.basis.nu)) < 1e-14);
    CHECK(triple(s.basis.e_u, s.basis.e_v, s.basis.nu) > 0.0);
}

TEST_CASE("sphere curvature and umbilic flag") {
    const double R = 1.7;
    const Chart sph = make_sphere(R);
    for (double u : {0.5, 1.2, 2.4}) {
        for (double v : {0.3, 1.5, 2.7}) {
            const ChartSample s = sample(sph, u, v);
            CHECK(s.kappa1 == doctest::Approx(1.0 / R).epsilon(1e-10));
            CHECK(s.kappa2 == doctest::Approx(1.0 / R).epsilon(1e-10));
            CHECK(s.H == doctest::Approx(1.0 / R).epsilon(1e-10));
            CHECK(s.K == doctest::Approx(1.0 / (R * R)).epsilon(1e-10));
            CHECK(s.umbilic);
            // outward normal, position = R nu
            CHECK(norm(s.jet.r - R * s.basis.nu) < 1e-12);
            // curvature tensor symmetric, tangential, equal to P/R
            CHECK(MatPredicates::symmetric(s.dsnu, 1e-10));
            CHECK(MatPredicates::tangential(s.dsnu, s.basis.nu, 1e-10));
            CHECK(norm(s.dsnu - (1.0 / R) * s.P) < 1e-10);
        }
    }
}

TEST_CASE("cylinder, catenoid, torus principal curvatures") {
    const Chart cyl = make_cylinder(2.0, -1.0, 1.0);
    const ChartSample sc = sample(cyl, 1.0, 0.25);
    CHECK(sc.kappa1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sc.kappa2 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(sc.umbilic);

    const Chart cat = make_catenoid(-1.0, 1.0);
    const ChartSample s0 = sample(cat, 1.0, 0.0);
    // waist circle: principal curvatures +-1, minimal
    CHECK(s0.kappa1 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s0.kappa2 == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(std::abs(s0.H) < 1e-12);
    const ChartSample s1 = sample(cat, 0.7, 0.6);
    const double c2 = std::cosh(0.6) * std::cosh(0.6);
    CHECK(s1.kappa1 == doctest::Approx(1.0 / c2).epsilon(1e-10));
    CHECK(s1.kappa2 == doctest::Approx(-1.0 / c2).epsilon(1e-10));

    const double Rmaj = 2.0, rmin = 0.5;
    const Chart tor = make_torus(Rmaj, rmin);
    const double vv = 0.9;
    const ChartSample st = sample(tor, 1.3, vv);
    const double k_tube = 1.0 / rmin;
    const double k_hoop = std::cos(vv) / (Rmaj + rmin * std::cos(vv));
    CHECK(st.kappa1 == doctest::Approx(std::max(k_tube, k_hoop)).epsilon(1e-10));
    CHECK(st.kappa2 == doctest::Approx(std::min(k_tube, k_hoop)).epsilon(1e-10));
    CHECK(st.K == doctest::Approx(k_tube * k_hoop).epsilon(1e-9));
}

TEST_CASE("revolution chart matches the generic formulas") {
    // rho(z) = 1 + 0.2 z^2
    auto rho = [](double z) {
        const Dual2 zz = Dual2::variable(z);
        return 1.0 + 0.2 * zz * zz;
    };
    const Chart rev = make_revolution(rho, -1.0, 1.0);
    const double z = 0.4;
    const ChartSample s = sample(rev, 0.8, z);
    const double p = 1.0 + 0.2 * z * z, p1 = 0.4 * z, p2 = 0.4;
    const double k_par = 1.0 / (p * std::sqrt(1.0 + p1 * p1));
    const double k_mer = -p2 / std::pow(1.0 + p1 * p1, 1.5);
    CHECK(s.kappa1 == doctest::Approx(std::max(k_par, k_mer)).epsilon(1e-10));
    CHECK(s.kappa2 == doctest::Approx(std::min(k_par, k_mer)).epsilon(1e-10));
    CHECK(s.K == doctest::Approx(k_par * k_mer).epsilon(1e-9));
}

TEST_CASE("surface operators on the sphere") {
    const double R = 1.3;
    const Chart sph = make_sphere(R);
    const double u = 1.1, v = 0.7;
    const ChartSample s = sample(sph, u, v);

    // height function f = e3 . x; grad_s f = P e3, lap_s f = -2H (e3 . nu)
    ScalarField height = [&](double uu, double vv) { return sph.jet(uu, vv).r.z; };
    const Vec3 g = surface_gradient_scalar(sph, height, u, v);
    CHECK(norm(g - s.P * Vec3{0.0, 0.0, 1.0}) < 1e-9);
    const double lap = surface_laplacian(sph, height, u, v);
    CHECK(lap == doctest::Approx(-2.0 * s.H * s.basis.nu.z).epsilon(1e-5));

    // position field: div_s x = 2, curl_s x = 0
    VectorField pos = [&](double uu, double vv) { return sph.jet(uu, vv).r; };
    CHECK(surface_divergence(sph, pos, u, v) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(norm(surface_curl(sph, pos, u, v)) < 1e-9);
    // grad_s nu = P / R, via the generic vector gradient
    VectorField nrm = [&](double uu, double vv) { return sample(sph, uu, vv).basis.nu; };
    CHECK(norm(surface_gradient_vector(sph, nrm, u, v) - s.dsnu) < 1e-8);
}

TEST_CASE("metric curvature formula agrees with det of the curvature tensor") {
    const Chart sph = make_sphere(1.3);
    CHECK(metric_gaussian_curvature(sph, 1.0, 1.2) ==
          doctest::Approx(sample(sph, 1.0, 1.2).K).epsilon(1e-7));
    const Chart cat = make_catenoid(-1.0, 1.0);
    CHECK(metric_gaussian_curvature(cat, 0.9, 0.3) ==
          doctest::Approx(sample(cat, 0.9, 0.3).K).epsilon(1e-7));
    const Chart tor = make_torus(2.0, 0.5);
    CHECK(metric_gaussian_curvature(tor, 1.3, 0.9) ==
          doctest::Approx(sample(tor, 1.3, 0.9).K).epsilon(1e-7));
}

TEST_CASE("connector identities for the coordinate frame") {
    const Chart tor = make_torus(2.0, 0.5);
    const double u = 1.3, v = 0.9;
    const ChartSample s = sample(tor, u, v);
    const ConnectorSet cs = connectors(tor, FrameSpec::coordinate(), u, v);
    const Frame f = eval_frame(tor, FrameSpec::coordinate(), u, v);

    // mixed-leg symmetry, trace and determinant of the shape data
    CHECK(dot(cs.d1, f.e2) == doctest::Approx(dot(cs.d2, f.e1)).epsilon(1e-10));
    CHECK(-(dot(cs.d1, f.e1) + dot(cs.d2, f.e2)) == doctest::Approx(2.0 * s.H).epsilon(1e-9));
    CHECK(triple(cs.d1, cs.d2, f.nu) == doctest::Approx(s.K).epsilon(1e-9));
    // gliding law reconstruction: grad_s nu = -e1 (x) d1 - e2 (x) d2
    CHECK(norm(s.dsnu + outer(f.e1, cs.d1) + outer(f.e2, cs.d2)) < 1e-9);
    // connectors are tangential covectors in their gradient slot
    CHECK(std::abs(dot(cs.c, f.nu)) < 1e-10);
    CHECK(std::abs(dot(cs.d1, f.nu)) < 1e-10);
    CHECK(std::abs(dot(cs.d2, f.nu)) < 1e-10);
}

TEST_CASE("principal-frame connectors diagonalize the shape data") {
    const Chart cat = make_catenoid(-1.0, 1.0);
    const double u = 0.8, v = 0.45;
    const ChartSample s = sample(cat, u, v);
    const Frame f = eval_frame(cat, FrameSpec::principal(), u, v);
    const ConnectorSet cs = connectors(cat, FrameSpec::principal(), u, v);
    CHECK(norm(cs.d1 + s.kappa1 * f.e1) < 1e-8);
    CHECK(norm(cs.d2 + s.kappa2 * f.e2) < 1e-8);
}

TEST_CASE("frame rotation transforms the connectors") {
    const Chart cat = make_catenoid(-1.0, 1.0);
    const double u = 0.8, v = 0.45;
    ScalarField alpha = [](double uu, double vv) { return uu * vv; };
    const FrameSpec rot = FrameSpec::rotated(FrameSpec::coordinate(), alpha);

    const ConnectorSet base = connectors(cat, FrameSpec::coordinate(), u, v);
    const ConnectorSet direct = connectors(cat, rot, u, v);
    const Vec3 ga = surface_gradient_scalar(cat, alpha, u, v);
    const ConnectorSet mapped = transform_connectors(base, alpha(u, v), ga);
    CHECK(norm(direct.c - mapped.c) < 1e-8);
    CHECK(norm(direct.d1 - mapped.d1) < 1e-8);
    CHECK(norm(direct.d2 - mapped.d2) < 1e-8);
}

TEST_CASE("compatibility residuals vanish for all frame kinds") {
    const Chart tor = make_torus(2.0, 0.5);
    ScalarField alpha = [](double uu, double vv) { return uu * vv; };
    const FrameSpec specs[] = {FrameSpec::coordinate(), FrameSpec::principal(),
                               FrameSpec::rotated(FrameSpec::coordinate(), alpha)};
    const double u = 1.3, v = 0.9;
    for (const FrameSpec& fs : specs) {
        CHECK(std::abs(gauss_residual(tor, fs, u, v)) < 1e-6);
        const CodazziResiduals cr = codazzi_residuals(tor, fs, u, v);
        CHECK(std::abs(cr.first) < 1e-5);
        CHECK(std::abs(cr.second) < 1e-5);
        const FrameCompatibilityResiduals fr = full_frame_compatibility(tor, fs, u, v);
        CHECK(norm(fr.spin) < 1e-5);
        CHECK(norm(fr.d1) < 1e-5);
        CHECK(norm(fr.d2) < 1e-5);
        CHECK(vector_integrability_residual(tor, fs, u, v) < 1e-5);
    }
}

TEST_CASE("diagonal-connector curvature relations in the eigenframe") {
    const Chart cat = make_catenoid(-1.0, 1.0);
    const CodazziResiduals pr = codazzi_principal_residuals(cat, 0.8, 0.45);
    CHECK(std::abs(pr.first) < 1e-6);
    CHECK(std::abs(pr.second) < 1e-6);
    CHECK(connector_gaussian_curvature(cat, 0.8, 0.45) ==
          doctest::Approx(sample(cat, 0.8, 0.45).K).epsilon(1e-5));

    const Chart sph = make_sphere(1.0);
    CHECK_THROWS_AS((void)codazzi_principal_residuals(sph, 1.0, 1.0), UmbilicError);
}

TEST_CASE("degenerate chart raises") {
    // collapses r_v at v = 0
    Chart bad(ChartKind::Custom, {0.0, 1.0, 0.0, 1.0},
              [](double u, double v) {
                  ChartJet j;
                  j.r = {u, v * v, 0.0};
                  j.r_u = {1.0, 0.0, 0.0};
                  j.r_v = {0.0, 2.0 * v, 0.0};
                  j.r_uu = j.r_uv = {0.0, 0.0, 0.0};
                  j.r_vv = {0.0, 2.0, 0.0};
                  return j;
              },
              "degenerate");
    CHECK_THROWS_AS((void)sample(bad, 0.5, 0.0), ImmersionError);
}
