#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "surfkin/metric_classes.hpp"
#include "surfkin/special.hpp"

using namespace surfkin;

namespace {

// uniform scaling y = c x, with the exact scaled image chart
Deformation make_scaling(const Chart& chart, double c) {
    auto eval = [&chart, c](double u, double v) {
        const ChartJet j = chart.jet(u, v);
        return DeformationJet{c * j.r, c * j.r_u, c * j.r_v};
    };
    Deformation d(eval, "scaling");
    d.set_image_chart(Chart(ChartKind::Custom, chart.domain(),
                            [&chart, c](double u, double v) {
                                ChartJet j = chart.jet(u, v);
                                j.r = c * j.r;
                                j.r_u = c * j.r_u;
                                j.r_v = c * j.r_v;
                                j.r_uu = c * j.r_uu;
                                j.r_uv = c * j.r_uv;
                                j.r_vv = c * j.r_vv;
                                return j;
                            },
                            "scaled"));
    return d;
}

} // namespace

TEST_CASE("identity carries every metric flag") {
    const Chart tor = make_torus(2.0, 0.5);
    const Deformation def = make_identity_deformation(tor);
    const KinematicsEngine eng(tor, def);
    const ClassificationReport rep = classify(eng, {16, 16, 2});
    CHECK(rep.conformal);
    CHECK(rep.isoareal);
    CHECK(rep.isometric);
    for (double l : rep.lambda) CHECK(l == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("squaring map is conformal with factor 2r but not isoareal") {
    const Chart ann = make_planar_annulus(0.5, 2.0, 0.0, 1.2);
    const Deformation def = make_conformal_square(ann);
    const KinematicsEngine eng(ann, def);
    const GridSpec grid{16, 16, 2};
    const ClassificationReport rep = classify(eng, grid);
    CHECK(rep.conformal);
    CHECK_FALSE(rep.isoareal);
    CHECK_FALSE(rep.isometric);
    // lambda = 2r at each interior node
    for (int k = 0; k < grid.interior_count(); ++k) {
        const GridNode n = interior_node(ann.domain(), grid, k);
        CHECK(rep.lambda[k] == doctest::Approx(2.0 * n.u).epsilon(1e-10));
    }
    // both surfaces flat, ln(2r) harmonic in the plane
    const ConformalCurvatureResiduals cc = conformal_curvature_residual(eng, 1.1, 0.6);
    CHECK(std::abs(cc.divided) < 1e-5);
    CHECK(std::abs(cc.exponential) < 1e-5);

    // tightening the tolerance never adds flags
    const ClassificationReport tight = classify(eng, grid, 1e-14);
    CHECK((!tight.conformal || rep.conformal));
    CHECK((!tight.isoareal || rep.isoareal));
    CHECK((!tight.isometric || rep.isometric));
}

TEST_CASE("uniform scaling of a sphere divides the curvature by the square factor") {
    const Chart sph = make_sphere(1.4);
    const double c = 1.7;
    const Deformation def = make_scaling(sph, c);
    const KinematicsEngine eng(sph, def);
    const ClassificationReport rep = classify(eng, {16, 16, 2});
    CHECK(rep.conformal);
    CHECK_FALSE(rep.isometric);
    const ConformalCurvatureResiduals cc = conformal_curvature_residual(eng, 1.1, 0.9);
    CHECK(cc.lambda == doctest::Approx(c).epsilon(1e-12));
    CHECK(std::abs(cc.divided) < 1e-6);
    // constant factor: image curvature is K / c^2 exactly
    CHECK(eng.image_sample(1.1, 0.9).Kstar ==
          doctest::Approx(sample(sph, 1.1, 0.9).K / (c * c)).epsilon(1e-9));
}

TEST_CASE("conformal laws survive an isometry as the trivial case") {
    const Chart tor = make_torus(2.0, 0.5);
    const Mat3 Q = rotation_about(normalized(Vec3{0.1, 0.8, 0.3}), 0.9);
    const Deformation def = make_rigid_deformation(tor, Q);
    const KinematicsEngine eng(tor, def);
    const ConformalLawResiduals cr = conformal_laws_residuals(eng, 1.3, 0.9);
    CHECK(cr.lambda == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cr.drill < 1e-8);
    CHECK(cr.connector < 1e-8);
    CHECK(cr.trace < 1e-8);
    CHECK(cr.mean_curvature < 1e-8);
}

TEST_CASE("curvature is an isometry invariant") {
    const Chart tor = make_torus(2.0, 0.5);
    const Mat3 Q = rotation_about(normalized(Vec3{-0.4, 0.2, 1.0}), 1.3);
    const Deformation def = make_rigid_deformation(tor, Q, Vec3{0.5, 0.0, -0.2});
    const KinematicsEngine eng(tor, def);
    const EgregiumReport rep = theorema_egregium_check(eng, {16, 16, 2});
    CHECK(rep.max_curvature_defect < 1e-8);
    CHECK(rep.max_drill < 1e-8);
}

TEST_CASE("frame-indifferent curvature transport forces a uniform rotation") {
    const Chart sph = make_sphere(1.2);
    const Mat3 Q = rotation_about(normalized(Vec3{0.6, -0.1, 0.7}), 0.8);
    const Deformation def = make_rigid_deformation(sph, Q);
    const KinematicsEngine eng(sph, def);
    const RigidityReport rep = frame_indifference_rigidity(eng, {16, 16, 2});
    CHECK(rep.antecedent);
    CHECK(rep.max_H < 1e-6);
    CHECK(rep.implication_ok);
}

TEST_CASE("eversion flips the curvature tensor: the implication is vacuous") {
    ProfileCurve prof{[](double z) { return cosh(Dual2::variable(z)); }, 0.2, 1.8, "cosh(z)"};
    const EversionMap map = evert_revolution(prof);
    const KinematicsEngine eng(map.source, map.def);
    const ClassificationReport rep = classify(eng, {16, 16, 2});
    CHECK(rep.isometric);
    const RigidityReport rig = frame_indifference_rigidity(eng, {16, 16, 2});
    CHECK_FALSE(rig.antecedent);  // sign-flipped transport, not indifferent
    CHECK(rig.implication_ok);
    CHECK(rig.max_H > 1e-2);      // bending varies along the meridians
}
