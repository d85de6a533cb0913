#ifndef SURFKIN_METRIC_CLASSES_HPP
#define SURFKIN_METRIC_CLASSES_HPP

// Metric classification of deformations (conformal / isoareal / isometric)
// and the grid verifiers for the curvature laws each class obeys.

#include <vector>

#include "surfkin/grid.hpp"
#include "surfkin/kinematics.hpp"

namespace surfkin {

struct ClassificationReport {
    bool conformal = false;
    bool isoareal = false;
    bool isometric = false;
    double conformal_defect = 0.0;  // max || C - lhat^2 P ||, lhat^2 = tr(C)/2
    double isoareal_defect = 0.0;   // max | det U - 1 |
    double isometric_defect = 0.0;  // max || C - P ||
    double tol = 0.0;
    std::vector<double> lambda;     // lhat per interior node (row-major)
};

// Grid classification; isometric implies both other flags by construction.
ClassificationReport classify(const KinematicsEngine& eng, const GridSpec& grid,
                              double tol = 1e-8);

// Both algebraic forms of the conformal curvature transport at a point:
// divided:      K* - (K - lap_s ln lambda)/lambda^2
// exponential:  lap_s phi + K* e^{2 phi} - K,   phi = ln lambda
// The two differ exactly by the factor lambda^2.
struct ConformalCurvatureResiduals {
    double divided = 0.0;
    double exponential = 0.0;
    double lambda = 0.0;
};
ConformalCurvatureResiduals conformal_curvature_residual(const KinematicsEngine& eng,
                                                         double u, double v);

// Gauss-curvature invariance under isometries, max over the interior grid;
// also tracks the drilling content a3 which must vanish for isometries.
struct EgregiumReport {
    double max_curvature_defect = 0.0;  // max |K* - K|
    double max_drill = 0.0;             // max |a3|
};
EgregiumReport theorema_egregium_check(const KinematicsEngine& eng, const GridSpec& grid);

// If an isometry also transports the curvature tensor frame-indifferently
// (grad_s* nu* = R grad_s nu R^T), its rotation field must be uniform.
struct RigidityReport {
    double max_indifference = 0.0;  // max || dsnu* - R dsnu R^T ||
    double max_H = 0.0;             // max || rotation gradient ||
    bool antecedent = false;        // indifference below tol everywhere
    bool implication_ok = false;    // antecedent => max_H < tol
};
RigidityReport frame_indifference_rigidity(const KinematicsEngine& eng, const GridSpec& grid,
                                           double tol = 1e-6);

} // namespace surfkin

#endif
