#ifndef SURFKIN_FRAME_HPP
#define SURFKIN_FRAME_HPP

// Moving frames on a chart, their connectors (c, d1, d2), frame rotation and
// connector transformation rules, and the compatibility residuals (Gauss,
// Peterson-Mainardi-Codazzi, and the full vector identities).

#include <memory>

#include "surfkin/chart.hpp"

namespace surfkin {

struct Frame {
    Vec3 e1, e2, nu;
};

class FrameSpec {
  public:
    enum class Kind { Principal, Coordinate, Rotated };

    static FrameSpec principal() { return FrameSpec(Kind::Principal); }
    static FrameSpec coordinate() { return FrameSpec(Kind::Coordinate); }
    static FrameSpec rotated(FrameSpec base, ScalarField alpha) {
        FrameSpec f(Kind::Rotated);
        f.base_ = std::make_shared<FrameSpec>(std::move(base));
        f.alpha_ = std::move(alpha);
        return f;
    }

    Kind kind() const { return kind_; }
    const FrameSpec& base() const { return *base_; }
    const ScalarField& alpha() const { return alpha_; }

  private:
    explicit FrameSpec(Kind k) : kind_(k) {}
    Kind kind_;
    std::shared_ptr<const FrameSpec> base_;
    ScalarField alpha_;
};

// Raw frame at a point. Principal frames fall back to the coordinate frame at
// flagged umbilics. The e1 sign is fixed deterministically per point.
Frame eval_frame(const Chart& chart, const FrameSpec& spec, double u, double v);

// Same, but with the e1 sign chosen to match a nearby reference frame; used
// when differentiating frame fields across an FD stencil.
Frame eval_frame_aligned(const Chart& chart, const FrameSpec& spec, double u, double v,
                         const Frame& ref);

struct ConnectorSet {
    Vec3 c, d1, d2;
};

ConnectorSet connectors(const Chart& chart, const FrameSpec& spec, double u, double v,
                        const FdOptions& fd = {});

// c' = c + grad_s(alpha); (d1, d2) rotate in-plane like (e1, e2).
ConnectorSet transform_connectors(const ConnectorSet& cs, double alpha, const Vec3& grad_alpha);

// curl_s c . nu + K; vanishes for any valid frame.
double gauss_residual(const Chart& chart, const FrameSpec& spec, double u, double v,
                      const FdOptions& fd = {});

struct CodazziResiduals {
    double first;   // curl_s d1 . nu - c x d2 . nu
    double second;  // curl_s d2 . nu + c x d1 . nu
};
CodazziResiduals codazzi_residuals(const Chart& chart, const FrameSpec& spec, double u, double v,
                                   const FdOptions& fd = {});

// Diagonal-connector forms in the curvature eigenframe:
// e2 . grad_s kappa1 - (kappa1 - kappa2)(e1 . c) and its partner.
CodazziResiduals codazzi_principal_residuals(const Chart& chart, double u, double v,
                                             const FdOptions& fd = {});

struct FrameCompatibilityResiduals {
    Vec3 spin;  // identity for curl_s c
    Vec3 d1;
    Vec3 d2;
};
FrameCompatibilityResiduals full_frame_compatibility(const Chart& chart, const FrameSpec& spec,
                                                     double u, double v, const FdOptions& fd = {});

// Residual of the second-gradient integrability identity applied to
// F = grad_s e1: || skw3(grad_s F) - skw3(F (grad_s nu) (x) nu) ||.
double vector_integrability_residual(const Chart& chart, const FrameSpec& spec, double u, double v,
                                     const FdOptions& fd = {});

// Connector-based alternative curvature formula in the curvature eigenframe.
double connector_gaussian_curvature(const Chart& chart, double u, double v,
                                    const FdOptions& fd = {});

} // namespace surfkin

#endif
