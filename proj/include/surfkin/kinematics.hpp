#ifndef SURFKIN_KINEMATICS_HPP
#define SURFKIN_KINEMATICS_HPP

// Pointwise kinematics of a deformed surface: the tangential deformation
// gradient, its two-point polar factors, the rotation gradient and its
// axial-vector contents, connector transport to the image surface, the
// stretch / drill / bend energy densities, and the integrability residuals.

#include <array>

#include "surfkin/deformation.hpp"
#include "surfkin/frame.hpp"
#include "surfkin/quat.hpp"

namespace surfkin {

// F = grad_s y, annihilates the source normal.
Mat3 deformation_gradient(const Chart& chart, const Deformation& def, double u, double v);

struct PolarData {
    Mat3 F;
    Mat3 R, U, V, C, B;
    double lambda1 = 0.0, lambda2 = 0.0;  // principal stretches, lambda1 >= lambda2
    Vec3 u1, u2;                          // right stretch eigenframe (source tangent)
    Vec3 v1, v2;                          // v_i = R u_i (image tangent)
    Vec3 nustar;                          // image normal, R nu
    bool degenerate = false;              // lambda1 == lambda2 within tolerance
};

// Two-point polar split F = R U = V R with R nu = nustar. `pref` seeds the
// tangent working basis and breaks the eigenvector tie at equal stretches.
PolarData surface_polar(const Mat3& F, const Vec3& nu, const Vec3& pref,
                        double degenerate_tol = 1e-9);

struct KinematicsOptions {
    FdOptions fd{};
    double degenerate_tol = 1e-9;
    double crosscheck_tol = 1e-6;  // dual-form energy agreement
    // Optional non-integrable perturbation of the rotation field (R -> R Q);
    // used by negative controls. Must be a proper rotation field.
    MatrixField rotation_perturbation{};
};

struct RodriguesContents {
    bool finite = false;       // false when the rotation angle reaches a half turn
    Vec3 a{};                  // full Rodrigues vector, W(a) = (R - R^T)/(1 + tr R)
    Vec3 d{};                  // drilling content, (a . nu) nu
    Vec3 b{};                  // bending content, tangential
    Mat3 R_d, R_b;             // split R = R_b R_d from the quaternion factors
};

// Drill/bend split of a rotation about the source normal. The factor
// rotations are always defined; the vector contents only away from half turns.
RodriguesContents rodrigues_split(const Mat3& R, const Vec3& nu, double tol = 1e-12);

struct KinSample {
    ChartSample src;
    PolarData pd;
    Vec3 w1, w2;               // working source tangent frame (stretch eigenframe
                               // or the coordinate frame when degenerate)
    Ten3 H;                    // rotation gradient pulled back through R
    Vec3 a1, a2, a3;           // axial contents of H on (w1, w2, nu)
    double recon_residual = 0.0;  // || H - sum W(b_i) (x) a_i ||
    ConnectorSet cs;           // source connectors of the working frame
    Vec3 cstar, d1star, d2star;   // image connectors of (v1, v2) via transport
    double ws = 0.0;           // stretch energy |U - P|^2
    double wd = 0.0;           // drill energy, 4 |a3|^2
    double wd_alt = 0.0;       // drill energy, |W(nu) o H|^2
    double wb = 0.0;           // bend energy, rotation-gradient form
    double wb_alt = 0.0;       // bend energy, connector form
    double Kstar = 0.0;        // image Gauss curvature from the transport formula
    Vec3 grad_l1, grad_l2;     // surface gradients of the principal stretches
    std::array<double, 3> integrability{};  // the three scalar conditions
};

class KinematicsEngine {
  public:
    KinematicsEngine(const Chart& chart, const Deformation& def, KinematicsOptions opt = {})
        : chart_(chart), def_(def), opt_(opt) {}

    const Chart& chart() const { return chart_; }
    const Deformation& deformation() const { return def_; }
    const KinematicsOptions& options() const { return opt_; }

    // Polar data at a point; rotation-perturbation applied if configured.
    PolarData polar(double u, double v) const;

    // Full pointwise kinematic sample.
    KinSample at(double u, double v) const;

    // Image-surface data sampled coherently with the transported normal
    // nustar: flips the chart normal if it disagrees with R nu.
    struct ImageSample {
        ChartSample raw;
        Mat3 dsnu_star;       // image curvature tensor wrt nustar
        double Hstar = 0.0, Kstar = 0.0;
    };
    ImageSample image_sample(double u, double v) const;  // needs an image chart

    // Image connectors of the pushed frame (v1, v2, nustar) by direct FD on
    // the image map; the independent partner of KinSample transport values.
    ConnectorSet image_connectors_direct(double u, double v) const;

  private:
    const Chart& chart_;
    const Deformation& def_;
    KinematicsOptions opt_;
};

// Residuals of the four conformal transport laws at a point, for maps with
// C = lambda^2 P: |a3 - nu x grad_s ln(l)|, |l c* - R(c + nu x grad_s ln(l))|,
// the frame-trace identity |a1.e1 + a2.e2|, and the mean-curvature law
// |2 l H* - (2H + a2.e1 - a1.e2)|.
struct ConformalLawResiduals {
    double drill = 0.0;
    double connector = 0.0;
    double trace = 0.0;
    double mean_curvature = 0.0;
    double lambda = 0.0;  // the conformal factor found
};
ConformalLawResiduals conformal_laws_residuals(const KinematicsEngine& eng, double u, double v);

} // namespace surfkin

#endif
