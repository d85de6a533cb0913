#ifndef SURFKIN_SPECIAL_HPP
#define SURFKIN_SPECIAL_HPP

// Closed-form deformation families: the drilling (associate) family of the
// catenoid, pure-bending eversions of surfaces of revolution, and the
// rigidity of sphere-to-sphere isometries.

#include <string>

#include "surfkin/deformation.hpp"
#include "surfkin/grid.hpp"
#include "surfkin/kinematics.hpp"

namespace surfkin {

struct ProfileCurve {
    ProfileFn rho;       // radius of the circular section, with d/dz and d2/dz2
    double zmin = 0.0, zmax = 1.0;
    std::string text;    // printable form

    // Throws ProfileError if rho is not strictly positive on the range.
    void validate(int samples = 257) const;
};

// Associate family of the catalog catenoid: an energy-free pure-drilling
// deformation for every constant angle; the quarter-turn image is a helicoid.
Deformation bonnet_deformation(const Chart& base, double alpha);

struct EversionMap {
    ProfileCurve profile;
    Chart source;        // revolution chart of the profile
    Deformation def;     // y = rho(z) e_r - z e_z, with exact image chart
    ScalarField alpha;   // bending angle, atan2(2 rho', rho'^2 - 1)
};

EversionMap evert_revolution(const ProfileCurve& profile, double theta0 = 0.0,
                             double theta1 = 3.0);

// Residuals of the three pointwise conditions a bending angle field must
// satisfy for a pure-bending eversion, on any chart whose u-lines are lines
// of curvature:
//   [0] grad_s k1 . e2 - k1 (k2 - k1) sin(a)/(1 - cos(a))
//   [1] grad_s k2 . e1
//   [2] || grad_s a - 2 k2 e2 ||
Vec3 eversion_condition_residuals(const Chart& chart, const ScalarField& alpha, double u,
                                  double v, const FdOptions& fd = {});

struct EversionReport {
    double max_isometry_defect = 0.0;   // || C - P ||
    double max_identity_defect = 0.0;   // || dsnu* + R dsnu R^T ||
    double max_kappa1_flip = 0.0;       // | k1* + k1 |
    double max_kappa2_law = 0.0;        // | k2* - (k2 - grad_s a . e2) |
    double max_energy = 0.0;            // max of ws, wd, wb over the grid
    double max_curvature_defect = 0.0;  // | K* - K |
    int nonfinite_contents = 0;         // nodes where tr R = -1
};
EversionReport eversion_check(const EversionMap& map, const GridSpec& grid = {});

// Max rotation-gradient norm of a sphere-to-sphere map; vanishes for
// isometries. Throws PreconditionError when the image leaves the sphere.
double sphere_rigidity(const Chart& sphere, const Deformation& def, const GridSpec& grid = {},
                       double radius_tol = 1e-8);

} // namespace surfkin

#endif
