#include "surfkin/frame.hpp"

#include <cmath>

#include "surfkin/errors.hpp"

namespace surfkin {

namespace {

Frame coordinate_frame(const ChartSample& s) {
    Frame f;
    f.e1 = s.basis.e_u;
    f.nu = s.basis.nu;
    f.e2 = cross(f.nu, f.e1);
    return f;
}

Frame raw_frame(const Chart& chart, const FrameSpec& spec, double u, double v) {
    switch (spec.kind()) {
        case FrameSpec::Kind::Coordinate:
            return coordinate_frame(sample(chart, u, v));
        case FrameSpec::Kind::Principal: {
            const ChartSample s = sample(chart, u, v);
            if (s.umbilic) return coordinate_frame(s);  // umbilic fallback
            return {s.p1, s.p2, s.basis.nu};
        }
        case FrameSpec::Kind::Rotated: {
            const Frame base = raw_frame(chart, spec.base(), u, v);
            const double a = spec.alpha()(u, v);
            const double ca = std::cos(a), sa = std::sin(a);
            return {ca * base.e1 + sa * base.e2, -sa * base.e1 + ca * base.e2, base.nu};
        }
    }
    throw NumericalError("unreachable frame kind");
}

Frame align(Frame f, const Frame& ref) {
    // the only gauge freedom of a raw frame is the simultaneous sign of (e1, e2)
    if (dot(f.e1, ref.e1) + dot(f.e2, ref.e2) < 0.0) {
        f.e1 = -f.e1;
        f.e2 = -f.e2;
    }
    return f;
}

struct FrameGradient {
    Frame frame;
    Mat3 ds_e1, ds_e2;
    TangentBasis basis;
};

// Surface gradients of the frame legs. Exact 2-jet path for the coordinate
// frame; sign-aligned FD of the frame field otherwise.
FrameGradient frame_gradient(const Chart& chart, const FrameSpec& spec, double u, double v,
                             const FdOptions& fd, const Frame* ref = nullptr) {
    FrameGradient out;
    const ChartJet jet = chart.jet(u, v);
    out.basis = tangent_basis(jet);

    if (spec.kind() == FrameSpec::Kind::Coordinate) {
        const TangentBasis& tb = out.basis;
        out.frame = {tb.e_u, cross(tb.nu, tb.e_u), tb.nu};

        const Vec3 e1 = tb.e_u;
        const Vec3 e1_u = (jet.r_uu - dot(e1, jet.r_uu) * e1) / tb.len_u;
        const Vec3 e1_v = (jet.r_uv - dot(e1, jet.r_uv) * e1) / tb.len_u;

        const Vec3 n = cross(jet.r_u, jet.r_v);
        const double nn = norm(n);
        const Mat3 Pn = Mat3::identity() - outer(tb.nu, tb.nu);
        const Vec3 nu_u = (Pn * (cross(jet.r_uu, jet.r_v) + cross(jet.r_u, jet.r_uv))) / nn;
        const Vec3 nu_v = (Pn * (cross(jet.r_uv, jet.r_v) + cross(jet.r_u, jet.r_vv))) / nn;

        const Vec3 e2_u = cross(nu_u, e1) + cross(tb.nu, e1_u);
        const Vec3 e2_v = cross(nu_v, e1) + cross(tb.nu, e1_v);

        out.ds_e1 = pullback_gradient(tb, e1_u, e1_v);
        out.ds_e2 = pullback_gradient(tb, e2_u, e2_v);
        return out;
    }

    Frame f0 = raw_frame(chart, spec, u, v);
    if (ref) f0 = align(f0, *ref);
    out.frame = f0;

    const double hu = fd.rel_step * chart.domain().span_u();
    const double hv = fd.rel_step * chart.domain().span_v();
    auto frame_at = [&](double uu, double vv) {
        return align(raw_frame(chart, spec, uu, vv), f0);
    };
    const Vec3 e1_u = fd_derivative([&](double x) { return frame_at(x, v).e1; }, u, hu, fd.richardson);
    const Vec3 e1_v = fd_derivative([&](double x) { return frame_at(u, x).e1; }, v, hv, fd.richardson);
    const Vec3 e2_u = fd_derivative([&](double x) { return frame_at(x, v).e2; }, u, hu, fd.richardson);
    const Vec3 e2_v = fd_derivative([&](double x) { return frame_at(u, x).e2; }, v, hv, fd.richardson);
    out.ds_e1 = pullback_gradient(out.basis, e1_u, e1_v);
    out.ds_e2 = pullback_gradient(out.basis, e2_u, e2_v);
    return out;
}

ConnectorSet connectors_impl(const FrameGradient& fg) {
    ConnectorSet cs;
    cs.c = transpose(fg.ds_e1) * fg.frame.e2;
    cs.d1 = transpose(fg.ds_e1) * fg.frame.nu;
    cs.d2 = transpose(fg.ds_e2) * fg.frame.nu;
    return cs;
}

} // namespace

Frame eval_frame(const Chart& chart, const FrameSpec& spec, double u, double v) {
    return raw_frame(chart, spec, u, v);
}

Frame eval_frame_aligned(const Chart& chart, const FrameSpec& spec, double u, double v,
                         const Frame& ref) {
    return align(raw_frame(chart, spec, u, v), ref);
}

ConnectorSet connectors(const Chart& chart, const FrameSpec& spec, double u, double v,
                        const FdOptions& fd) {
    return connectors_impl(frame_gradient(chart, spec, u, v, fd));
}

ConnectorSet transform_connectors(const ConnectorSet& cs, double alpha, const Vec3& grad_alpha) {
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    ConnectorSet out;
    out.c = cs.c + grad_alpha;
    out.d1 = ca * cs.d1 + sa * cs.d2;
    out.d2 = -sa * cs.d1 + ca * cs.d2;
    return out;
}

namespace {

// Connector fields with the frame gauge pinned to the frame at the stencil
// center, so that the d-connectors do not flip sign across the stencil.
struct ConnectorField {
    const Chart& chart;
    const FrameSpec& spec;
    Frame center;
    FdOptions fd;

    ConnectorSet operator()(double u, double v) const {
        return connectors_impl(frame_gradient(chart, spec, u, v, fd, &center));
    }
};

FdOptions outer_of(const FdOptions& fd) {
    FdOptions out = fd;
    out.rel_step = 10.0 * fd.rel_step;  // keep inner FD noise below outer truncation
    return out;
}

} // namespace

double gauss_residual(const Chart& chart, const FrameSpec& spec, double u, double v,
                      const FdOptions& fd) {
    const ChartSample s = sample(chart, u, v);
    const ConnectorField field{chart, spec, raw_frame(chart, spec, u, v), fd};
    const Vec3 curl_c = surface_curl(
        chart, [&](double uu, double vv) { return field(uu, vv).c; }, u, v, outer_of(fd));
    return dot(curl_c, s.basis.nu) + s.K;
}

CodazziResiduals codazzi_residuals(const Chart& chart, const FrameSpec& spec, double u, double v,
                                   const FdOptions& fd) {
    const ChartSample s = sample(chart, u, v);
    const ConnectorField field{chart, spec, raw_frame(chart, spec, u, v), fd};
    const ConnectorSet cs = field(u, v);
    const FdOptions outer = outer_of(fd);
    const Vec3 curl_d1 = surface_curl(
        chart, [&](double uu, double vv) { return field(uu, vv).d1; }, u, v, outer);
    const Vec3 curl_d2 = surface_curl(
        chart, [&](double uu, double vv) { return field(uu, vv).d2; }, u, v, outer);
    CodazziResiduals r;
    r.first = dot(curl_d1, s.basis.nu) - triple(cs.c, cs.d2, s.basis.nu);
    r.second = dot(curl_d2, s.basis.nu) + triple(cs.c, cs.d1, s.basis.nu);
    return r;
}

CodazziResiduals codazzi_principal_residuals(const Chart& chart, double u, double v,
                                             const FdOptions& fd) {
    const ChartSample s0 = sample(chart, u, v);
    if (s0.umbilic)
        throw UmbilicError("principal-frame Codazzi forms are undefined at an umbilic");
    const FrameSpec principal = FrameSpec::principal();
    const Frame f0 = raw_frame(chart, principal, u, v);
    const ConnectorSet cs = connectors_impl(frame_gradient(chart, principal, u, v, fd, &f0));

    const Vec3 grad_k1 = surface_gradient_scalar(
        chart, [&](double uu, double vv) { return sample(chart, uu, vv).kappa1; }, u, v, fd);
    const Vec3 grad_k2 = surface_gradient_scalar(
        chart, [&](double uu, double vv) { return sample(chart, uu, vv).kappa2; }, u, v, fd);

    CodazziResiduals r;
    r.first = dot(f0.e2, grad_k1) - (s0.kappa1 - s0.kappa2) * dot(f0.e1, cs.c);
    r.second = dot(f0.e1, grad_k2) - (s0.kappa1 - s0.kappa2) * dot(f0.e2, cs.c);
    return r;
}

FrameCompatibilityResiduals full_frame_compatibility(const Chart& chart, const FrameSpec& spec,
                                                     double u, double v, const FdOptions& fd) {
    const ChartSample s = sample(chart, u, v);
    const Frame f0 = raw_frame(chart, spec, u, v);
    const ConnectorField field{chart, spec, f0, fd};
    const ConnectorSet cs = field(u, v);
    const FdOptions outer = outer_of(fd);
    const Vec3 nu = s.basis.nu;

    const Vec3 curl_c = surface_curl(
        chart, [&](double uu, double vv) { return field(uu, vv).c; }, u, v, outer);
    const Vec3 curl_d1 = surface_curl(
        chart, [&](double uu, double vv) { return field(uu, vv).d1; }, u, v, outer);
    const Vec3 curl_d2 = surface_curl(
        chart, [&](double uu, double vv) { return field(uu, vv).d2; }, u, v, outer);

    const double c1 = dot(cs.c, f0.e1), c2 = dot(cs.c, f0.e2);
    const double d11 = dot(cs.d1, f0.e1), d12 = dot(cs.d1, f0.e2);
    const double d21 = dot(cs.d2, f0.e1), d22 = dot(cs.d2, f0.e2);

    FrameCompatibilityResiduals r;
    r.spin = curl_c + cross(cs.d1, cs.d2) - c1 * cross(cs.d1, nu) - c2 * cross(cs.d2, nu);
    r.d1 = curl_d1 - cross(cs.c, cs.d2) - d11 * cross(cs.d1, nu) - d12 * cross(cs.d2, nu);
    r.d2 = curl_d2 + cross(cs.c, cs.d1) - d21 * cross(cs.d1, nu) - d22 * cross(cs.d2, nu);
    return r;
}

double vector_integrability_residual(const Chart& chart, const FrameSpec& spec, double u, double v,
                                     const FdOptions& fd) {
    const ChartSample s = sample(chart, u, v);
    const Frame f0 = raw_frame(chart, spec, u, v);
    auto F_at = [&](double uu, double vv) {
        return frame_gradient(chart, spec, uu, vv, fd, &f0).ds_e1;
    };
    const Mat3 F = F_at(u, v);

    const FdOptions ofd = outer_of(fd);
    const double hu = ofd.rel_step * chart.domain().span_u();
    const double hv = ofd.rel_step * chart.domain().span_v();
    const Mat3 F_u = fd_derivative([&](double x) { return F_at(x, v); }, u, hu, ofd.richardson);
    const Mat3 F_v = fd_derivative([&](double x) { return F_at(u, x); }, v, hv, ofd.richardson);
    const Ten3 grad_F = outer(F_u, s.basis.g_u) + outer(F_v, s.basis.g_v);

    const Ten3 rhs = outer(F * s.dsnu, s.basis.nu);
    return norm(skw3(grad_F) - skw3(rhs));
}

double connector_gaussian_curvature(const Chart& chart, double u, double v, const FdOptions& fd) {
    const FrameSpec principal = FrameSpec::principal();
    const Frame f0 = raw_frame(chart, principal, u, v);
    const ConnectorField field{chart, principal, f0, fd};
    const ConnectorSet cs = field(u, v);
    const double c1 = dot(cs.c, f0.e1), c2 = dot(cs.c, f0.e2);

    auto c_comp = [&](double uu, double vv, bool first) {
        const Frame f = align(raw_frame(chart, principal, uu, vv), f0);
        const Vec3 c = field(uu, vv).c;
        return dot(c, first ? f.e1 : f.e2);
    };
    const FdOptions outer = outer_of(fd);
    const Vec3 grad_c1 = surface_gradient_scalar(
        chart, [&](double uu, double vv) { return c_comp(uu, vv, true); }, u, v, outer);
    const Vec3 grad_c2 = surface_gradient_scalar(
        chart, [&](double uu, double vv) { return c_comp(uu, vv, false); }, u, v, outer);
    return dot(f0.e2, grad_c1) - dot(f0.e1, grad_c2) - c1 * c1 - c2 * c2;
}

} // namespace surfkin
