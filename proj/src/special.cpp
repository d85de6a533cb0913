#include "surfkin/special.hpp"

#include <algorithm>
#include <cmath>

#include "surfkin/errors.hpp"

namespace surfkin {

void ProfileCurve::validate(int samples) const {
    if (!(zmax > zmin)) throw ProfileError("empty z-range for profile");
    for (int k = 0; k < samples; ++k) {
        const double z = zmin + (zmax - zmin) * k / (samples - 1);
        const Dual2 r = rho(z);
        if (!(r.v > 0.0)) throw ProfileError("profile radius must stay positive on the range");
    }
}

Deformation bonnet_deformation(const Chart& base, double alpha) {
    // the family is only energy-free over a minimal base
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 4; ++j) {
            const Domain& d = base.domain();
            const double u = d.u0 + d.span_u() * i / 4.0;
            const double v = d.v0 + d.span_v() * j / 4.0;
            if (std::abs(sample(base, u, v).H) > 1e-6)
                throw MinimalityError("drilling family requires a minimal base surface");
        }
    }
    if (base.kind() != ChartKind::Catenoid)
        throw PreconditionError("closed-form drilling family is implemented for the catalog catenoid");

    // y = cos(a) C + sin(a) Chat with C the catenoid and Chat its conjugate
    // harmonic partner; (u, v) = (theta, z)
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    auto image_jet = [ca, sa](double u, double v) {
        const double ct = std::cos(u), st = std::sin(u);
        const double ch = std::cosh(v), sh = std::sinh(v);
        const Vec3 C{ch * ct, ch * st, v};
        const Vec3 Ch{sh * st, -sh * ct, u};
        const Vec3 C_u{-ch * st, ch * ct, 0.0};
        const Vec3 C_v{sh * ct, sh * st, 1.0};
        const Vec3 C_uu{-ch * ct, -ch * st, 0.0};
        const Vec3 C_uv{-sh * st, sh * ct, 0.0};
        const Vec3 C_vv{ch * ct, ch * st, 0.0};
        ChartJet j;
        j.r = ca * C + sa * Ch;
        // the conjugate partner satisfies Chat_u = C_v, Chat_v = -C_u
        j.r_u = ca * C_u + sa * C_v;
        j.r_v = ca * C_v - sa * C_u;
        j.r_uu = ca * C_uu + sa * C_uv;
        j.r_uv = ca * C_uv + sa * C_vv;
        j.r_vv = ca * C_vv - sa * C_uv;
        return j;
    };
    auto eval = [image_jet](double u, double v) {
        const ChartJet j = image_jet(u, v);
        return DeformationJet{j.r, j.r_u, j.r_v};
    };
    Deformation d(eval, "drilling-family");
    d.set_image_chart(Chart(ChartKind::Custom, base.domain(), image_jet, "drilling-image"));
    return d;
}

EversionMap evert_revolution(const ProfileCurve& profile, double theta0, double theta1) {
    profile.validate();
    EversionMap map{profile,
                    make_revolution(profile.rho, profile.zmin, profile.zmax, theta0, theta1,
                                    "revolution"),
                    Deformation([](double, double) { return DeformationJet{}; }, "unset"),
                    {}};

    const ProfileFn rho = profile.rho;
    // y(theta, z) = rho(z) e_r(theta) - z e_z
    auto image_jet = [rho](double u, double v) {
        const Dual2 r = rho(v);
        const double ct = std::cos(u), st = std::sin(u);
        ChartJet j;
        j.r = {r.v * ct, r.v * st, -v};
        j.r_u = {-r.v * st, r.v * ct, 0.0};
        j.r_v = {r.d * ct, r.d * st, -1.0};
        j.r_uu = {-r.v * ct, -r.v * st, 0.0};
        j.r_uv = {-r.d * st, r.d * ct, 0.0};
        j.r_vv = {r.dd * ct, r.dd * st, 0.0};
        return j;
    };
    Deformation def(
        [image_jet](double u, double v) {
            const ChartJet j = image_jet(u, v);
            return DeformationJet{j.r, j.r_u, j.r_v};
        },
        "eversion");
    def.set_image_chart(
        Chart(ChartKind::Custom, map.source.domain(), image_jet, "eversion-image"));
    map.def = std::move(def);

    map.alpha = [rho](double, double v) {
        const Dual2 r = rho(v);
        return std::atan2(2.0 * r.d, r.d * r.d - 1.0);
    };
    return map;
}

namespace {

// Principal curvature along the direction closest to e_u, and its partner.
struct CurvaturePair {
    double k_par, k_mer;
    Vec3 e1, e2;
};

CurvaturePair curvature_pair(const ChartSample& s) {
    CurvaturePair cp;
    if (s.umbilic) {
        // Principal directions are indeterminate; fall back to the coordinate frame.
        cp.k_par = s.kappa1;
        cp.k_mer = s.kappa1;
        cp.e1 = s.basis.e_u;
        cp.e2 = cross(s.basis.nu, cp.e1);
        return cp;
    }
    const double a1 = std::abs(dot(s.p1, s.basis.e_u));
    const double a2 = std::abs(dot(s.p2, s.basis.e_u));
    if (a1 >= a2) {
        cp.k_par = s.kappa1;
        cp.k_mer = s.kappa2;
        cp.e1 = dot(s.p1, s.basis.e_u) < 0.0 ? -s.p1 : s.p1;
    } else {
        cp.k_par = s.kappa2;
        cp.k_mer = s.kappa1;
        cp.e1 = dot(s.p2, s.basis.e_u) < 0.0 ? -s.p2 : s.p2;
    }
    cp.e2 = cross(s.basis.nu, cp.e1);
    return cp;
}

} // namespace

Vec3 eversion_condition_residuals(const Chart& chart, const ScalarField& alpha, double u,
                                  double v, const FdOptions& fd) {
    const ChartSample s = sample(chart, u, v);
    const CurvaturePair cp = curvature_pair(s);
    if (!s.umbilic &&
        std::abs(dot(cp.e1, s.basis.e_u)) < 0.999)
        throw PreconditionError("u-lines must be lines of curvature for the bending conditions");

    const double a0 = alpha(u, v);
    const double one_mc = 1.0 - std::cos(a0);
    if (std::abs(one_mc) < 1e-9)
        throw BendingAngleSingularity("bending conditions degenerate as the angle vanishes");

    const Vec3 grad_k1 = surface_gradient_scalar(
        chart, [&](double uu, double vv) { return curvature_pair(sample(chart, uu, vv)).k_par; },
        u, v, fd);
    const Vec3 grad_k2 = surface_gradient_scalar(
        chart, [&](double uu, double vv) { return curvature_pair(sample(chart, uu, vv)).k_mer; },
        u, v, fd);
    const Vec3 grad_a = surface_gradient_scalar(chart, alpha, u, v, fd);

    Vec3 res;
    res.x = dot(grad_k1, cp.e2) -
            cp.k_par * (cp.k_mer - cp.k_par) * std::sin(a0) / one_mc;
    res.y = dot(grad_k2, cp.e1);
    res.z = norm(grad_a - 2.0 * cp.k_mer * cp.e2);
    return res;
}

EversionReport eversion_check(const EversionMap& map, const GridSpec& grid) {
    const KinematicsEngine eng(map.source, map.def);
    struct NodeVals {
        double iso, ident, k1, k2, energy, dk;
        int nonfinite;
    };
    const auto vals = map_interior<NodeVals>(map.source.domain(), grid, [&](const GridNode& n) {
        const KinSample ks = eng.at(n.u, n.v);
        const KinematicsEngine::ImageSample is = eng.image_sample(n.u, n.v);
        const Mat3& R = ks.pd.R;
        NodeVals nv{};
        nv.iso = norm(ks.pd.C - ks.src.P);
        nv.ident = norm(is.dsnu_star + R * ks.src.dsnu * transpose(R));

        // the working frame is (e_theta, meridian): the curvature lines
        const Vec3 v1 = R * ks.w1, v2 = R * ks.w2;
        const double k1 = dot(ks.w1, ks.src.dsnu * ks.w1);
        const double k2 = dot(ks.w2, ks.src.dsnu * ks.w2);
        const double k1s = dot(v1, is.dsnu_star * v1);
        const double k2s = dot(v2, is.dsnu_star * v2);
        nv.k1 = std::abs(k1s + k1);
        const Vec3 grad_a =
            surface_gradient_scalar(map.source, map.alpha, n.u, n.v, eng.options().fd);
        nv.k2 = std::abs(k2s - (k2 - dot(grad_a, ks.w2)));

        nv.energy = std::max({ks.ws, ks.wd, ks.wb});
        nv.dk = std::abs(is.Kstar - ks.src.K);
        nv.nonfinite = rodrigues_split(R, ks.src.basis.nu).finite ? 0 : 1;
        return nv;
    });
    EversionReport rep;
    for (const NodeVals& nv : vals) {
        rep.max_isometry_defect = std::max(rep.max_isometry_defect, nv.iso);
        rep.max_identity_defect = std::max(rep.max_identity_defect, nv.ident);
        rep.max_kappa1_flip = std::max(rep.max_kappa1_flip, nv.k1);
        rep.max_kappa2_law = std::max(rep.max_kappa2_law, nv.k2);
        rep.max_energy = std::max(rep.max_energy, nv.energy);
        rep.max_curvature_defect = std::max(rep.max_curvature_defect, nv.dk);
        rep.nonfinite_contents += nv.nonfinite;
    }
    return rep;
}

double sphere_rigidity(const Chart& sphere, const Deformation& def, const GridSpec& grid,
                       double radius_tol) {
    const Domain& dom = sphere.domain();
    const double radius = norm(sphere.jet(dom.u0 + 0.5 * dom.span_u(),
                                          dom.v0 + 0.5 * dom.span_v()).r);
    const KinematicsEngine eng(sphere, def);
    const auto vals = map_interior<double>(dom, grid, [&](const GridNode& n) {
        const DeformationJet dj = def.jet(n.u, n.v);
        if (std::abs(norm(dj.y) - radius) > radius_tol * std::max(radius, 1.0))
            throw PreconditionError("image point leaves the sphere");
        return norm(eng.at(n.u, n.v).H);
    });
    return *std::max_element(vals.begin(), vals.end());
}

} // namespace surfkin
