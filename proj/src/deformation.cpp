#include "surfkin/deformation.hpp"

#include <cmath>

#include "surfkin/errors.hpp"

namespace surfkin {

const Chart& Deformation::image_chart() const {
    if (!image_) throw PreconditionError("deformation has no closed-form image chart");
    return *image_;
}

Deformation make_identity_deformation(const Chart& chart) {
    auto eval = [&chart](double u, double v) {
        const ChartJet j = chart.jet(u, v);
        return DeformationJet{j.r, j.r_u, j.r_v};
    };
    Deformation d(eval, "identity");
    d.set_image_chart(chart);
    return d;
}

namespace {

Chart transformed_chart(const Chart& chart, const Mat3& Q, const Vec3& t, std::string name) {
    auto eval = [&chart, Q, t](double u, double v) {
        const ChartJet j = chart.jet(u, v);
        return ChartJet{Q * j.r + t, Q * j.r_u, Q * j.r_v, Q * j.r_uu, Q * j.r_uv, Q * j.r_vv};
    };
    return Chart(ChartKind::Custom, chart.domain(), eval, std::move(name));
}

} // namespace

Deformation make_rigid_deformation(const Chart& chart, const Mat3& Q, const Vec3& t) {
    if (!MatPredicates::orthogonal(Q, 1e-10) || det(Q) < 0.0)
        throw PreconditionError("rigid deformation needs a proper rotation");
    auto eval = [&chart, Q, t](double u, double v) {
        const ChartJet j = chart.jet(u, v);
        return DeformationJet{Q * j.r + t, Q * j.r_u, Q * j.r_v};
    };
    Deformation d(eval, "rigid:" + chart.name());
    d.set_image_chart(transformed_chart(chart, Q, t, "rigid-image:" + chart.name()));
    return d;
}

Deformation rigidly_moved(const Deformation& def, const Chart& chart, const Mat3& Q,
                          const Vec3& t) {
    if (!MatPredicates::orthogonal(Q, 1e-10) || det(Q) < 0.0)
        throw PreconditionError("rigid deformation needs a proper rotation");
    auto base = [&def](double u, double v) { return def.jet(u, v); };
    auto eval = [base, Q, t](double u, double v) {
        const DeformationJet j = base(u, v);
        return DeformationJet{Q * j.y + t, Q * j.y_u, Q * j.y_v};
    };
    Deformation moved(eval, "moved:" + def.name());
    if (def.has_image_chart())
        moved.set_image_chart(transformed_chart(def.image_chart(), Q, t, "moved-image"));
    (void)chart;
    return moved;
}

Deformation make_conformal_square(const Chart& annulus) {
    if (annulus.kind() != ChartKind::PlanarAnnulus)
        throw PreconditionError("conformal squaring map is defined on the flat polar annulus");
    if (annulus.domain().u0 <= 0.0)
        throw PreconditionError("annulus must exclude the branch point r = 0");
    // (u, v) = (r, t); y = (r^2 cos 2t, r^2 sin 2t, 0)
    auto image_jet = [](double r, double t) {
        const double c = std::cos(2.0 * t), s = std::sin(2.0 * t), r2 = r * r;
        ChartJet j;
        j.r = {r2 * c, r2 * s, 0.0};
        j.r_u = {2.0 * r * c, 2.0 * r * s, 0.0};
        j.r_v = {-2.0 * r2 * s, 2.0 * r2 * c, 0.0};
        j.r_uu = {2.0 * c, 2.0 * s, 0.0};
        j.r_uv = {-4.0 * r * s, 4.0 * r * c, 0.0};
        j.r_vv = {-4.0 * r2 * c, -4.0 * r2 * s, 0.0};
        return j;
    };
    auto eval = [image_jet](double u, double v) {
        const ChartJet j = image_jet(u, v);
        return DeformationJet{j.r, j.r_u, j.r_v};
    };
    Deformation d(eval, "conformal-square");
    d.set_image_chart(Chart(ChartKind::Custom, annulus.domain(), image_jet, "squared-annulus"));
    return d;
}

Deformation make_sphere_twist(const Chart& sphere, double strength) {
    if (sphere.kind() != ChartKind::Sphere)
        throw PreconditionError("latitude twist is defined on the sphere chart");
    // azimuthal shift growing with the polar angle u: v -> v + strength * u
    auto eval = [&sphere, strength](double u, double v) {
        const ChartJet j = sphere.jet(u, v + strength * u);
        return DeformationJet{j.r, j.r_u + strength * j.r_v, j.r_v};
    };
    return Deformation(eval, "sphere-twist");
}

} // namespace surfkin
