#ifndef SURFKIN_CHART_HPP
#define SURFKIN_CHART_HPP

// Parametric charts with exact derivatives up to order 2, pointwise geometric
// sampling (frames, curvature tensor, principal curvatures), and the numeric
// surface differential operators built on the chart pullback.

#include <functional>
#include <memory>
#include <string>

#include "surfkin/dual2.hpp"
#include "surfkin/fd.hpp"
#include "surfkin/tensor3.hpp"

namespace surfkin {

// Exact 2-jet of the chart map at a parameter point.
struct ChartJet {
    Vec3 r, r_u, r_v, r_uu, r_uv, r_vv;
};

struct Domain {
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;
    double span_u() const { return u1 - u0; }
    double span_v() const { return v1 - v0; }
    bool contains(double u, double v, double slack = 0.0) const {
        const double su = slack * span_u(), sv = slack * span_v();
        return u >= u0 - su && u <= u1 + su && v >= v0 - sv && v <= v1 + sv;
    }
};

enum class ChartKind { Plane, PlanarAnnulus, Sphere, Cylinder, Catenoid, Helicoid, Torus, Revolution, Custom };

// Smooth scalar (u,v) -> rho with exact first and second z-derivatives.
using ProfileFn = std::function<Dual2(double z)>;

class Chart {
  public:
    Chart(ChartKind kind, Domain dom, std::function<ChartJet(double, double)> eval,
          std::string name)
        : kind_(kind), dom_(dom), eval_(std::move(eval)), name_(std::move(name)) {}

    ChartKind kind() const { return kind_; }
    const Domain& domain() const { return dom_; }
    const std::string& name() const { return name_; }

    ChartJet jet(double u, double v) const { return eval_(u, v); }

  private:
    ChartKind kind_;
    Domain dom_;
    std::function<ChartJet(double, double)> eval_;
    std::string name_;
};

// Catalog charts. Parameter conventions are (u, v) with nu = e_u x e_v.
Chart make_plane(double u0, double u1, double v0, double v1);
// polar chart of the flat plane: u = radius, v = angle
Chart make_planar_annulus(double r0, double r1, double theta0, double theta1);
// u = polar angle in (0, pi), v = azimuth; outward normal, curvatures 1/R
Chart make_sphere(double radius, Domain dom = {0.3, 2.8, 0.0, 3.0});
Chart make_cylinder(double radius, double zmin, double zmax);
Chart make_catenoid(double zmin, double zmax);
Chart make_helicoid(double zmin, double zmax);
Chart make_torus(double major, double minor);
// surface of revolution x(u=theta, v=z) = rho(z) e_r(theta) + z e_z
Chart make_revolution(ProfileFn profile, double zmin, double zmax,
                      double theta0 = 0.0, double theta1 = 3.0,
                      std::string name = "revolution");

// First-order frame data shared by the sampling and differential operators.
struct TangentBasis {
    Vec3 r_u, r_v;
    double len_u = 0.0, len_v = 0.0;
    Vec3 e_u, e_v, nu;
    Vec3 g_u, g_v;  // dual (reciprocal) tangent basis
    double ortho_defect = 0.0;
};

TangentBasis tangent_basis(const ChartJet& jet);

// All pointwise geometric data of the surface at (u, v).
struct ChartSample {
    double u = 0.0, v = 0.0;
    ChartJet jet;
    TangentBasis basis;
    Mat3 P;          // projector onto the tangent plane
    Mat3 dsnu;       // curvature tensor, surface gradient of the normal
    double kappa1 = 0.0, kappa2 = 0.0;  // principal curvatures, kappa1 >= kappa2
    Vec3 p1, p2;     // principal directions, p1 x p2 . nu = +1
    double H = 0.0, K = 0.0;
    bool umbilic = false;
};

ChartSample sample(const Chart& chart, double u, double v);

// Pullback of parameter-space partial derivatives to a surface gradient.
inline Mat3 pullback_gradient(const TangentBasis& tb, const Vec3& w_u, const Vec3& w_v) {
    return outer(w_u, tb.g_u) + outer(w_v, tb.g_v);
}
inline Vec3 pullback_gradient(const TangentBasis& tb, double f_u, double f_v) {
    return f_u * tb.g_u + f_v * tb.g_v;
}

using ScalarField = std::function<double(double, double)>;
using VectorField = std::function<Vec3(double, double)>;
using MatrixField = std::function<Mat3(double, double)>;

// Numeric surface differential operators (FD in parameter space).
Vec3 surface_gradient_scalar(const Chart& chart, const ScalarField& f, double u, double v,
                             const FdOptions& fd = {}, bool allow_general = true,
                             double ortho_tol = 1e-9);
Mat3 surface_gradient_vector(const Chart& chart, const VectorField& w, double u, double v,
                             const FdOptions& fd = {});
Vec3 surface_curl(const Chart& chart, const VectorField& w, double u, double v,
                  const FdOptions& fd = {});
double surface_divergence(const Chart& chart, const VectorField& w, double u, double v,
                          const FdOptions& fd = {});
// div_s grad_s, two nested FD levels
double surface_laplacian(const Chart& chart, const ScalarField& f, double u, double v,
                         const FdOptions& fd = {});

// Appendix-style metric formula for K in orthogonal coordinates, plus the
// agreement partner det(dsnu) available from sample().
double metric_gaussian_curvature(const Chart& chart, double u, double v,
                                 const FdOptions& fd = {}, double ortho_tol = 1e-6);

} // namespace surfkin

#endif
