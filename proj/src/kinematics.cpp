#include "surfkin/kinematics.hpp"

#include <cmath>

#include "surfkin/errors.hpp"

namespace surfkin {

Mat3 deformation_gradient(const Chart& chart, const Deformation& def, double u, double v) {
    const TangentBasis tb = tangent_basis(chart.jet(u, v));
    const DeformationJet dj = def.jet(u, v);
    if (norm(cross(dj.y_u, dj.y_v)) < 1e-12 * std::max(norm(dj.y_u) * norm(dj.y_v), 1.0))
        throw DegenerateDeformation("deformed map is rank deficient at the sample point");
    return pullback_gradient(tb, dj.y_u, dj.y_v);
}

PolarData surface_polar(const Mat3& F, const Vec3& nu, const Vec3& pref, double degenerate_tol) {
    PolarData pd;
    pd.F = F;
    pd.C = transpose(F) * F;
    pd.B = F * transpose(F);

    Vec3 t1 = pref - dot(pref, nu) * nu;
    const double tn = norm(t1);
    if (tn < 1e-12) throw PreconditionError("seed direction is parallel to the normal");
    t1 = t1 / tn;
    const Vec3 t2 = cross(nu, t1);

    // restriction of C to the tangent plane in the (t1, t2) basis
    const double a = dot(t1, pd.C * t1);
    const double b = dot(t1, pd.C * t2);
    const double c = dot(t2, pd.C * t2);
    const double mean = 0.5 * (a + c);
    const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    const double mu1 = mean + disc, mu2 = std::max(mean - disc, 0.0);
    pd.lambda1 = std::sqrt(mu1);
    pd.lambda2 = std::sqrt(mu2);
    if (pd.lambda2 < 1e-12)
        throw DegenerateDeformation("vanishing principal stretch");

    pd.degenerate = (pd.lambda1 - pd.lambda2) <= degenerate_tol * std::max(pd.lambda1, 1.0);
    if (pd.degenerate) {
        pd.u1 = t1;
    } else {
        const double phi = 0.5 * std::atan2(2.0 * b, a - c);  // larger-eigenvalue direction
        pd.u1 = std::cos(phi) * t1 + std::sin(phi) * t2;
        if (dot(pd.u1, t1) < 0.0) pd.u1 = -pd.u1;
    }
    pd.u2 = cross(nu, pd.u1);

    pd.U = pd.lambda1 * outer(pd.u1, pd.u1) + pd.lambda2 * outer(pd.u2, pd.u2);
    pd.v1 = (F * pd.u1) / pd.lambda1;
    pd.v2 = (F * pd.u2) / pd.lambda2;
    // re-orthonormalize the image pair against accumulated roundoff
    pd.v1 = normalized(pd.v1);
    pd.v2 = normalized(pd.v2 - dot(pd.v2, pd.v1) * pd.v1);
    pd.nustar = cross(pd.v1, pd.v2);
    pd.R = outer(pd.v1, pd.u1) + outer(pd.v2, pd.u2) + outer(pd.nustar, nu);
    pd.V = pd.lambda1 * outer(pd.v1, pd.v1) + pd.lambda2 * outer(pd.v2, pd.v2);
    return pd;
}

RodriguesContents rodrigues_split(const Mat3& R, const Vec3& nu, double tol) {
    RodriguesContents rc;
    const Quat q = from_matrix(R);
    const SwingTwist st = swing_twist(q, nu);
    rc.R_d = to_matrix(st.twist);
    rc.R_b = to_matrix(st.swing);

    const double tr = trace(R);
    rc.finite = (1.0 + tr) > tol;
    if (rc.finite) {
        const Mat3 W = (R - transpose(R)) * (1.0 / (1.0 + tr));
        rc.a = axial(W, 1e-6);
        const double an = dot(rc.a, nu);
        rc.d = an * nu;
        // tangential bending content; also the swing factor's Rodrigues vector
        rc.b = ((projector(nu) + an * wmat(nu)) * rc.a) * (1.0 / (1.0 + an * an));
    }
    return rc;
}

PolarData KinematicsEngine::polar(double u, double v) const {
    const TangentBasis tb = tangent_basis(chart_.jet(u, v));
    const Mat3 F = deformation_gradient(chart_, def_, u, v);
    PolarData pd = surface_polar(F, tb.nu, tb.e_u, opt_.degenerate_tol);
    if (opt_.rotation_perturbation) {
        const Mat3 Q = opt_.rotation_perturbation(u, v);
        pd.R = pd.R * Q;
        pd.v1 = pd.R * pd.u1;
        pd.v2 = pd.R * pd.u2;
        pd.nustar = pd.R * tb.nu;
        pd.V = pd.R * pd.U * transpose(pd.R);
    }
    return pd;
}

namespace {

// Stretch eigenvector field with the sign gauge pinned to a reference.
Vec3 aligned_u1(const PolarData& pd, const Vec3& ref) {
    return dot(pd.u1, ref) < 0.0 ? -pd.u1 : pd.u1;
}

Ten3 pullback_third(const TangentBasis& tb, const Mat3& m_u, const Mat3& m_v) {
    return outer(m_u, tb.g_u) + outer(m_v, tb.g_v);
}

} // namespace

KinSample KinematicsEngine::at(double u, double v) const {
    KinSample ks;
    ks.src = sample(chart_, u, v);
    ks.pd = polar(u, v);
    ks.w1 = ks.pd.u1;
    ks.w2 = ks.pd.u2;
    const Vec3 nu = ks.src.basis.nu;

    const FdOptions& fd = opt_.fd;
    const double hu = fd.rel_step * chart_.domain().span_u();
    const double hv = fd.rel_step * chart_.domain().span_v();

    // rotation gradient: H_ijk = R_hi R_hj;k, skew in (i, j)
    auto R_at = [&](double uu, double vv) { return polar(uu, vv).R; };
    const Mat3 R_u = fd_derivative([&](double x) { return R_at(x, v); }, u, hu, fd.richardson);
    const Mat3 R_v = fd_derivative([&](double x) { return R_at(u, x); }, v, hv, fd.richardson);
    const Ten3 grad_R = pullback_third(ks.src.basis, R_u, R_v);
    const Mat3& R = ks.pd.R;
    Ten3 H{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double s = 0.0;
                for (int h = 0; h < 3; ++h) s += R(h, i) * grad_R(h, j, k);
                H(i, j, k) = s;
            }
    ks.H = H;

    // axial contents on the working triad; <W(u), W(v)> = 2 u . v
    const Vec3 basis_vecs[3] = {ks.w1, ks.w2, nu};
    Vec3* a_out[3] = {&ks.a1, &ks.a2, &ks.a3};
    Ten3 recon{};
    for (int i = 0; i < 3; ++i) {
        *a_out[i] = 0.5 * circ_mt(wmat(basis_vecs[i]), H);
        recon += outer(wmat(basis_vecs[i]), *a_out[i]);
    }
    ks.recon_residual = norm(H - recon);

    // source connectors of the working frame. At equal stretches the seed
    // makes the working frame the coordinate frame, with exact gradients.
    if (ks.pd.degenerate) {
        ks.cs = connectors(chart_, FrameSpec::coordinate(), u, v, fd);
    } else {
        auto w1_at = [&](double uu, double vv) {
            return aligned_u1(polar(uu, vv), ks.w1);
        };
        auto w2_at = [&](double uu, double vv) {
            return cross(sample(chart_, uu, vv).basis.nu, w1_at(uu, vv));
        };
        const Vec3 w1_u = fd_derivative([&](double x) { return w1_at(x, v); }, u, hu, fd.richardson);
        const Vec3 w1_v = fd_derivative([&](double x) { return w1_at(u, x); }, v, hv, fd.richardson);
        const Vec3 w2_u = fd_derivative([&](double x) { return w2_at(x, v); }, u, hu, fd.richardson);
        const Vec3 w2_v = fd_derivative([&](double x) { return w2_at(u, x); }, v, hv, fd.richardson);
        const Mat3 ds_w1 = pullback_gradient(ks.src.basis, w1_u, w1_v);
        const Mat3 ds_w2 = pullback_gradient(ks.src.basis, w2_u, w2_v);
        ks.cs.c = transpose(ds_w1) * ks.w2;
        ks.cs.d1 = transpose(ds_w1) * nu;
        ks.cs.d2 = transpose(ds_w2) * nu;
    }

    // transport of the connectors to the image frame (v1, v2, nustar)
    const Mat3 Vinv = (1.0 / ks.pd.lambda1) * outer(ks.pd.v1, ks.pd.v1) +
                      (1.0 / ks.pd.lambda2) * outer(ks.pd.v2, ks.pd.v2);
    ks.cstar = Vinv * (R * (ks.cs.c + ks.a3));
    ks.d1star = Vinv * (R * (ks.cs.d1 - ks.a2));
    ks.d2star = Vinv * (R * (ks.cs.d2 + ks.a1));

    // energies
    ks.ws = [&] {
        const Mat3 D = ks.pd.U - ks.src.P;
        return frob_inner(D, D);
    }();
    ks.wd = 4.0 * norm2(ks.a3);
    ks.wd_alt = norm2(circ_mt(wmat(nu), H));
    const double l1 = ks.pd.lambda1, l2 = ks.pd.lambda2;
    const double bend_h = norm2(H) - 0.5 * ks.wd_alt - 4.0 * dot(nu, circ_tm(H, ks.src.dsnu));
    ks.wb = bend_h * bend_h;
    const double bend_c = l1 * l1 * norm2(ks.d1star) + l2 * l2 * norm2(ks.d2star) -
                          norm2(ks.cs.d1) - norm2(ks.cs.d2);
    ks.wb_alt = 4.0 * bend_c * bend_c;

    if (!opt_.rotation_perturbation) {
        const double scale_d = std::max(1.0, std::max(ks.wd, ks.wd_alt));
        if (std::abs(ks.wd - ks.wd_alt) > opt_.crosscheck_tol * scale_d)
            throw InternalConsistencyError("drill energy dual forms disagree");
        const double scale_b = std::max(1.0, std::max(ks.wb, ks.wb_alt));
        if (std::abs(ks.wb - ks.wb_alt) > opt_.crosscheck_tol * scale_b)
            throw InternalConsistencyError("bend energy dual forms disagree");
    }

    // image Gauss curvature from the transport formula
    const double num = ks.src.K -
        dot(cross(ks.a1, ks.a2) - cross(ks.a1, ks.cs.d1) - cross(ks.a2, ks.cs.d2), nu);
    ks.Kstar = num / (l1 * l2);

    // stretch gradients and the three scalar integrability conditions
    auto l_at = [&](double uu, double vv, bool first) {
        const PolarData p = polar(uu, vv);
        return first ? p.lambda1 : p.lambda2;
    };
    ks.grad_l1 = surface_gradient_scalar(
        chart_, [&](double uu, double vv) { return l_at(uu, vv, true); }, u, v, fd);
    ks.grad_l2 = surface_gradient_scalar(
        chart_, [&](double uu, double vv) { return l_at(uu, vv, false); }, u, v, fd);

    ks.integrability[0] = l1 * dot(ks.cs.d1 - ks.a2, ks.w2) - l2 * dot(ks.cs.d2 + ks.a1, ks.w1);
    ks.integrability[1] =
        l1 * dot(ks.a3, ks.w2) + (l1 - l2) * dot(ks.cs.c, ks.w2) - dot(ks.grad_l2, ks.w1);
    ks.integrability[2] =
        l2 * dot(ks.a3, ks.w1) + (l2 - l1) * dot(ks.cs.c, ks.w1) + dot(ks.grad_l1, ks.w2);
    return ks;
}

KinematicsEngine::ImageSample KinematicsEngine::image_sample(double u, double v) const {
    const Chart& img = def_.image_chart();
    ImageSample is{sample(img, u, v), Mat3::zero(), 0.0, 0.0};
    const Vec3 nustar = polar(u, v).nustar;
    const double agree = dot(is.raw.basis.nu, nustar);
    if (std::abs(agree) < 0.9)
        throw InternalConsistencyError("image chart normal is not parallel to the transported normal");
    const double sgn = agree > 0.0 ? 1.0 : -1.0;
    is.dsnu_star = sgn * is.raw.dsnu;
    is.Hstar = sgn * is.raw.H;
    is.Kstar = is.raw.K;
    return is;
}

ConnectorSet KinematicsEngine::image_connectors_direct(double u, double v) const {
    const KinSample ks = at(u, v);
    const FdOptions& fd = opt_.fd;
    const double hu = fd.rel_step * chart_.domain().span_u();
    const double hv = fd.rel_step * chart_.domain().span_v();

    auto pushed = [&](double uu, double vv) {
        const PolarData p = polar(uu, vv);
        const Vec3 w1 = aligned_u1(p, ks.w1);
        struct Triple { Vec3 v1, v2, ns; } t;
        t.v1 = p.R * w1;
        t.v2 = p.R * cross(sample(chart_, uu, vv).basis.nu, w1);
        t.ns = p.nustar;
        return t;
    };

    // image tangent basis from the exact first partials of the deformed map
    const DeformationJet dj = def_.jet(u, v);
    ChartJet ij{};
    ij.r = dj.y;
    ij.r_u = dj.y_u;
    ij.r_v = dj.y_v;
    const TangentBasis itb = tangent_basis(ij);

    const Vec3 v1_u = fd_derivative([&](double x) { return pushed(x, v).v1; }, u, hu, fd.richardson);
    const Vec3 v1_v = fd_derivative([&](double x) { return pushed(u, x).v1; }, v, hv, fd.richardson);
    const Vec3 v2_u = fd_derivative([&](double x) { return pushed(x, v).v2; }, u, hu, fd.richardson);
    const Vec3 v2_v = fd_derivative([&](double x) { return pushed(u, x).v2; }, v, hv, fd.richardson);
    const Mat3 ds_v1 = pullback_gradient(itb, v1_u, v1_v);
    const Mat3 ds_v2 = pullback_gradient(itb, v2_u, v2_v);

    const auto t0 = pushed(u, v);
    ConnectorSet cs;
    cs.c = transpose(ds_v1) * t0.v2;
    cs.d1 = transpose(ds_v1) * t0.ns;
    cs.d2 = transpose(ds_v2) * t0.ns;
    return cs;
}

ConformalLawResiduals conformal_laws_residuals(const KinematicsEngine& eng, double u, double v) {
    const KinSample ks = eng.at(u, v);
    ConformalLawResiduals out;
    const double l = 0.5 * (ks.pd.lambda1 + ks.pd.lambda2);
    out.lambda = l;
    out.trace = std::abs(dot(ks.a1, ks.w1) + dot(ks.a2, ks.w2));

    const Vec3 nu = ks.src.basis.nu;
    const Vec3 grad_lnl = surface_gradient_scalar(
        eng.chart(),
        [&](double uu, double vv) {
            const PolarData p = eng.polar(uu, vv);
            return std::log(0.5 * (p.lambda1 + p.lambda2));
        },
        u, v, eng.options().fd);

    out.drill = norm(ks.a3 - cross(nu, grad_lnl));
    out.connector = norm(l * ks.cstar - ks.pd.R * (ks.cs.c + cross(nu, grad_lnl)));

    double Hstar;
    if (eng.deformation().has_image_chart()) {
        Hstar = eng.image_sample(u, v).Hstar;
    } else {
        Hstar = -0.5 * (dot(ks.d1star, ks.pd.v1) + dot(ks.d2star, ks.pd.v2));
    }
    out.mean_curvature =
        std::abs(2.0 * l * Hstar - (2.0 * ks.src.H + dot(ks.a2, ks.w1) - dot(ks.a1, ks.w2)));
    return out;
}

} // namespace surfkin
