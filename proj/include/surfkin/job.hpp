#ifndef SURFKIN_JOB_HPP
#define SURFKIN_JOB_HPP

#include <memory>
#include <string>

#include "surfkin/chart.hpp"
#include "surfkin/deformation.hpp"
#include "surfkin/grid.hpp"
#include "surfkin/report.hpp"
#include "surfkin/special.hpp"

namespace surfkin {

// A fully resolved job: surface + deformation + grid + output settings.
// Populated from a flat INI-style config file and/or command-line flags
// (flags win).
struct JobConfig {
    std::string surface = "sphere";  // plane|annulus|sphere|cylinder|catenoid|helicoid|torus|revolution
    std::string profile;             // expression in z, for revolution surfaces
    double radius = 1.0;
    double minor = 0.5;              // torus tube radius (config file only)
    double zmin = -1.0, zmax = 1.0;  // z-range (revolution/cylinder/catenoid) or
                                     // radial range (annulus)

    std::string deformation = "identity";  // identity|rotation|bonnet|eversion|conformal-square
    double alpha = 1.5707963267948966;     // bonnet drilling angle
    double axis_x = 0.0, axis_y = 0.0, axis_z = 1.0;  // rotation deformation
    double angle = 0.5;

    GridSpec grid;
    double tol = 1e-5;
    unsigned seed = 1;

    std::string out_dir;         // empty: report to stdout only
    std::string format = "csv";  // csv|json
    bool normals = false;        // emit vn lines in OBJ output
};

// Parses the flat sectioned key=value format ([surface], [deformation],
// [grid], [output]) into cfg; unknown keys or malformed lines throw
// ConfigError.
void apply_config_text(JobConfig& cfg, const std::string& text);
void apply_config_file(JobConfig& cfg, const std::string& path);

// Validates ranges and cross-field requirements; throws ConfigError.
void validate_config(const JobConfig& cfg);

Chart build_surface(const JobConfig& cfg);

// Revolution profile for the job: the configured expression, or the implied
// one for catalog surfaces of revolution (cylinder, catenoid, sphere).
ProfileCurve job_profile(const JobConfig& cfg);

// Builds the configured deformation over `base`.  Eversions replace the
// base chart with the revolution surface of the configured profile, so the
// chart used by the job is returned alongside.  The chart lives on the heap
// because deformations reference it.
struct JobGeometry {
    std::shared_ptr<const Chart> chart_ptr;
    Deformation def;
    const Chart& chart() const { return *chart_ptr; }
};
JobGeometry build_geometry(const JobConfig& cfg);

// Frame/connector compatibility residuals over the grid (curvature-tensor
// symmetry, Gauss, Codazzi, connector symmetry, metric-curvature agreement).
// The metric-curvature row is skipped for non-orthogonal charts.
ResidualReport run_check(const JobConfig& cfg);
ResidualReport run_check(const JobConfig& cfg, const Chart& chart);

// Deformation analysis: metric classification, energy statistics,
// integrability residuals, curvature-transport defects.
ResidualReport run_analyze(const JobConfig& cfg);

// Pure-bending eversion of the configured revolution surface.
ResidualReport run_evert(const JobConfig& cfg);

// Isometric drilling family of the catenoid at the configured angle.
ResidualReport run_bonnet(const JobConfig& cfg);

struct ExportSummary {
    std::string source_path;
    std::string image_path;
    int vertex_count = 0;
    int face_count = 0;
    int dropped_faces = 0;
};
ExportSummary run_export_mesh(const JobConfig& cfg);

// Serializes in the configured format and, when out_dir is set, writes
// report.csv / report.json there as well.
std::string emit_report(const JobConfig& cfg, const ResidualReport& report);

} // namespace surfkin

#endif
