#include "surfkin/job.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <type_traits>

#include "surfkin/frame.hpp"
#include "surfkin/kinematics.hpp"
#include "surfkin/mesh_export.hpp"
#include "surfkin/metric_classes.hpp"
#include "surfkin/profile_expr.hpp"
#include "surfkin/quat.hpp"
#include "surfkin/special.hpp"

namespace surfkin {

namespace {

double parse_double(const std::string& s, const std::string& key) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for '" + key + "': " + s);
    }
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size()) throw ConfigError("bad numeric value for '" + key + "': " + s);
    return v;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

void apply_key(JobConfig& cfg, const std::string& section, const std::string& key,
               const std::string& value) {
    const std::string where = section.empty() ? key : section + "." + key;
    if (section == "surface") {
        if (key == "kind") cfg.surface = value;
        else if (key == "profile") cfg.profile = value;
        else if (key == "radius") cfg.radius = parse_double(value, where);
        else if (key == "minor") cfg.minor = parse_double(value, where);
        else if (key == "zmin") cfg.zmin = parse_double(value, where);
        else if (key == "zmax") cfg.zmax = parse_double(value, where);
        else throw ConfigError("unknown config key '" + where + "'");
    } else if (section == "deformation") {
        if (key == "kind") cfg.deformation = value;
        else if (key == "alpha") cfg.alpha = parse_double(value, where);
        else if (key == "angle") cfg.angle = parse_double(value, where);
        else if (key == "axis_x") cfg.axis_x = parse_double(value, where);
        else if (key == "axis_y") cfg.axis_y = parse_double(value, where);
        else if (key == "axis_z") cfg.axis_z = parse_double(value, where);
        else throw ConfigError("unknown config key '" + where + "'");
    } else if (section == "grid") {
        if (key == "nu") cfg.grid.nu = static_cast<int>(parse_double(value, where));
        else if (key == "nv") cfg.grid.nv = static_cast<int>(parse_double(value, where));
        else if (key == "margin") cfg.grid.margin = static_cast<int>(parse_double(value, where));
        else if (key == "tol") cfg.tol = parse_double(value, where);
        else if (key == "seed") cfg.seed = static_cast<unsigned>(parse_double(value, where));
        else throw ConfigError("unknown config key '" + where + "'");
    } else if (section == "output") {
        if (key == "dir") cfg.out_dir = value;
        else if (key == "format") cfg.format = value;
        else if (key == "normals") cfg.normals = (value == "true" || value == "1");
        else throw ConfigError("unknown config key '" + where + "'");
    } else {
        throw ConfigError("unknown config section '" + section + "'");
    }
}

} // namespace

void apply_config_text(JobConfig& cfg, const std::string& text) {
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": unterminated section");
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        apply_key(cfg, section, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

void apply_config_file(JobConfig& cfg, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    apply_config_text(cfg, ss.str());
}

void validate_config(const JobConfig& cfg) {
    cfg.grid.validate();
    if (cfg.tol <= 0.0) throw ConfigError("tolerance must be positive");
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("format must be csv or json");
    if (cfg.zmin >= cfg.zmax) throw ConfigError("zmin must be below zmax");
}

Chart build_surface(const JobConfig& cfg) {
    if (cfg.surface == "plane") return make_plane(0.0, 1.0, 0.0, 1.0);
    if (cfg.surface == "annulus")
        return make_planar_annulus(cfg.zmin > 0.0 ? cfg.zmin : 0.5,
                                   cfg.zmax > 0.0 ? cfg.zmax : 1.5, 0.0, 1.5);
    if (cfg.surface == "sphere") return make_sphere(cfg.radius);
    if (cfg.surface == "cylinder") return make_cylinder(cfg.radius, cfg.zmin, cfg.zmax);
    if (cfg.surface == "catenoid") return make_catenoid(cfg.zmin, cfg.zmax);
    if (cfg.surface == "helicoid") return make_helicoid(cfg.zmin, cfg.zmax);
    if (cfg.surface == "torus") return make_torus(cfg.radius, cfg.minor);
    if (cfg.surface == "revolution") {
        if (cfg.profile.empty())
            throw ConfigError("revolution surface requires a profile expression");
        ProfileCurve pc = job_profile(cfg);
        return make_revolution(pc.rho, pc.zmin, pc.zmax);
    }
    throw ConfigError("unknown surface kind '" + cfg.surface + "'");
}

namespace {

// Profile text for the catalog surfaces of revolution, so eversions can be
// requested by surface name alone.
std::string implied_profile(const JobConfig& cfg) {
    if (!cfg.profile.empty()) return cfg.profile;
    if (cfg.surface == "cylinder") return format_g17(cfg.radius);
    if (cfg.surface == "catenoid") return "cosh(z)";
    if (cfg.surface == "sphere")
        return "sqrt(" + format_g17(cfg.radius * cfg.radius) + " - z^2)";
    throw ConfigError("this job needs a revolution profile (--profile or a catalog "
                      "surface of revolution)");
}

} // namespace

ProfileCurve job_profile(const JobConfig& cfg) {
    const std::string text = implied_profile(cfg);
    ProfileExpr expr;
    try {
        expr = parse_profile(text);
    } catch (const ParseError& e) {
        throw ConfigError("profile parse error at offset " + std::to_string(e.offset) +
                          ": " + e.what());
    }
    ProfileCurve pc;
    pc.rho = [expr = std::make_shared<ProfileExpr>(std::move(expr))](double z) {
        return expr->eval(z);
    };
    pc.zmin = cfg.zmin;
    pc.zmax = cfg.zmax;
    pc.text = text;
    pc.validate();
    return pc;
}

JobGeometry build_geometry(const JobConfig& cfg) {
    if (cfg.deformation == "eversion") {
        EversionMap em = evert_revolution(job_profile(cfg));
        return {std::make_shared<Chart>(std::move(em.source)), std::move(em.def)};
    }
    auto chart = std::make_shared<const Chart>(build_surface(cfg));
    if (cfg.deformation == "identity")
        return {chart, make_identity_deformation(*chart)};
    if (cfg.deformation == "rotation") {
        const Vec3 axis{cfg.axis_x, cfg.axis_y, cfg.axis_z};
        if (norm(axis) < 1e-12) throw ConfigError("rotation axis must be nonzero");
        return {chart,
                make_rigid_deformation(*chart, rotation_about(normalized(axis), cfg.angle))};
    }
    if (cfg.deformation == "bonnet") return {chart, bonnet_deformation(*chart, cfg.alpha)};
    if (cfg.deformation == "conformal-square")
        return {chart, make_conformal_square(*chart)};
    throw ConfigError("unknown deformation kind '" + cfg.deformation + "'");
}

namespace {

struct GridScan {
    const Domain& dom;
    const GridSpec& grid;

    template <class F>
    auto values(F&& fn) const {
        return map_interior<std::invoke_result_t<F, GridNode>>(dom, grid,
                                                               std::forward<F>(fn));
    }

    template <class V, class F>
    CheckRow row(const std::vector<V>& vals, F&& pick, std::string name,
                 double tol) const {
        ResidualAccumulator acc;
        for (int k = 0; k < static_cast<int>(vals.size()); ++k) {
            const GridNode n = interior_node(dom, grid, k);
            acc.add(pick(vals[k]), n.u, n.v);
        }
        return acc.finish(std::move(name), tol);
    }
};

CheckRow info_row(CheckRow row) {
    row.status = "info";
    return row;
}

} // namespace

ResidualReport run_check(const JobConfig& cfg) {
    return run_check(cfg, build_surface(cfg));
}

ResidualReport run_check(const JobConfig& cfg, const Chart& chart) {
    validate_config(cfg);
    const FrameSpec frame = FrameSpec::coordinate();

    struct NodeVals {
        double symm, gauss, codazzi, connector_symm, metricK, ortho;
    };
    const GridScan scan{chart.domain(), cfg.grid};
    const auto vals = scan.values([&](const GridNode& n) {
        const ChartSample s = sample(chart, n.u, n.v);
        NodeVals nv{};
        nv.symm = norm(s.dsnu - transpose(s.dsnu));
        nv.gauss = std::abs(gauss_residual(chart, frame, n.u, n.v));
        const CodazziResiduals cz = codazzi_residuals(chart, frame, n.u, n.v);
        nv.codazzi = std::max(std::abs(cz.first), std::abs(cz.second));
        const ConnectorSet cs = connectors(chart, frame, n.u, n.v);
        const Frame f = eval_frame(chart, frame, n.u, n.v);
        nv.connector_symm = std::abs(dot(cs.d1, f.e2) - dot(cs.d2, f.e1));
        nv.ortho = s.basis.ortho_defect;
        nv.metricK = nv.ortho <= 1e-9
                         ? std::abs(metric_gaussian_curvature(chart, n.u, n.v) - s.K)
                         : 0.0;
        return nv;
    });

    double max_ortho = 0.0;
    for (const NodeVals& nv : vals) max_ortho = std::max(max_ortho, nv.ortho);
    const bool orthogonal = max_ortho <= 1e-9;

    ResidualReport rep;
    rep.job = "check " + chart.name();
    const GridScan& g = scan;
    rep.checks.push_back(g.row(vals, [](const NodeVals& n) { return n.symm; },
                               "curvature_tensor_symmetry", cfg.tol));
    rep.checks.push_back(
        g.row(vals, [](const NodeVals& n) { return n.gauss; }, "gauss", cfg.tol));
    rep.checks.push_back(
        g.row(vals, [](const NodeVals& n) { return n.codazzi; }, "codazzi", cfg.tol));
    rep.checks.push_back(g.row(vals, [](const NodeVals& n) { return n.connector_symm; },
                               "connector_symmetry", cfg.tol));
    CheckRow mk = g.row(vals, [](const NodeVals& n) { return n.metricK; },
                        "metric_curvature_agreement", cfg.tol);
    if (!orthogonal) {
        mk = CheckRow{};
        mk.name = "metric_curvature_agreement";
        mk.tol = cfg.tol;
        mk.status = "skipped (non-orthogonal)";
    }
    rep.checks.push_back(std::move(mk));

    // Off-grid spot checks at seeded random interior points.
    std::mt19937 rng(cfg.seed);
    const Domain& dom = chart.domain();
    const double iu = dom.span_u() * cfg.grid.margin / cfg.grid.nu;
    const double iv = dom.span_v() * cfg.grid.margin / cfg.grid.nv;
    std::uniform_real_distribution<double> du(dom.u0 + iu, dom.u1 - iu);
    std::uniform_real_distribution<double> dv(dom.v0 + iv, dom.v1 - iv);
    ResidualAccumulator acc;
    for (int k = 0; k < 64; ++k) {
        const double u = du(rng), v = dv(rng);
        acc.add(std::abs(gauss_residual(chart, frame, u, v)), u, v);
    }
    rep.checks.push_back(acc.finish("gauss_random_points", cfg.tol));
    return rep;
}

ResidualReport run_analyze(const JobConfig& cfg) {
    validate_config(cfg);
    const JobGeometry geo = build_geometry(cfg);
    const KinematicsEngine eng(geo.chart(), geo.def);
    const GridScan scan{geo.chart().domain(), cfg.grid};

    const ClassificationReport cls = classify(eng, cfg.grid, cfg.tol);

    struct NodeVals {
        double ws, wd, wb, r1, r2, r3, kdefect, drill;
    };
    const auto vals = scan.values([&](const GridNode& n) {
        const KinSample ks = eng.at(n.u, n.v);
        NodeVals nv{};
        nv.ws = ks.ws;
        nv.wd = ks.wd;
        nv.wb = ks.wb;
        nv.r1 = std::abs(ks.integrability[0]);
        nv.r2 = std::abs(ks.integrability[1]);
        nv.r3 = std::abs(ks.integrability[2]);
        nv.kdefect = std::abs(ks.Kstar - ks.src.K);
        nv.drill = norm(ks.a3);
        return nv;
    });

    ResidualReport rep;
    rep.job = "analyze " + cfg.surface + " " + cfg.deformation;
    const GridScan& g = scan;

    const auto flag_row = [&](const char* name, bool flag, double defect) {
        CheckRow c;
        c.name = name;
        c.max_residual = defect;
        c.tol = cfg.tol;
        c.status = flag ? "true" : "false";
        return c;
    };
    rep.checks.push_back(flag_row("class_conformal", cls.conformal, cls.conformal_defect));
    rep.checks.push_back(flag_row("class_isoareal", cls.isoareal, cls.isoareal_defect));
    rep.checks.push_back(flag_row("class_isometric", cls.isometric, cls.isometric_defect));

    rep.checks.push_back(info_row(
        g.row(vals, [](const NodeVals& n) { return n.ws; }, "stretch_energy", 0.0)));
    rep.checks.push_back(info_row(
        g.row(vals, [](const NodeVals& n) { return n.wd; }, "drill_energy", 0.0)));
    rep.checks.push_back(info_row(
        g.row(vals, [](const NodeVals& n) { return n.wb; }, "bend_energy", 0.0)));

    rep.checks.push_back(g.row(vals, [](const NodeVals& n) { return n.r1; },
                               "integrability_stretch_shear", cfg.tol));
    rep.checks.push_back(g.row(vals, [](const NodeVals& n) { return n.r2; },
                               "integrability_first_stretch", cfg.tol));
    rep.checks.push_back(g.row(vals, [](const NodeVals& n) { return n.r3; },
                               "integrability_second_stretch", cfg.tol));

    CheckRow kd = g.row(vals, [](const NodeVals& n) { return n.kdefect; },
                        "curvature_invariance", cfg.tol);
    CheckRow dr = g.row(vals, [](const NodeVals& n) { return n.drill; },
                        "isometry_drill_content", cfg.tol);
    if (!cls.isometric) {
        // Curvature invariance and vanishing drill are isometry laws.
        kd.status = "skipped (not isometric)";
        dr.status = "skipped (not isometric)";
    }
    rep.checks.push_back(std::move(kd));
    rep.checks.push_back(std::move(dr));

    if (cls.conformal && !cls.isometric) {
        ResidualAccumulator acc;
        for (int k = 0; k < cfg.grid.interior_count(); ++k) {
            const GridNode n = interior_node(geo.chart().domain(), cfg.grid, k);
            acc.add(std::abs(conformal_curvature_residual(eng, n.u, n.v).divided), n.u,
                    n.v);
        }
        rep.checks.push_back(acc.finish("conformal_curvature_law", cfg.tol));
    }
    return rep;
}

ResidualReport run_evert(const JobConfig& cfg) {
    validate_config(cfg);
    const EversionMap em = evert_revolution(job_profile(cfg));
    const EversionReport er = eversion_check(em, cfg.grid);

    ResidualReport rep;
    rep.job = "evert " + em.profile.text;
    const auto row = [&](const char* name, double value, double tol) {
        CheckRow c;
        c.name = name;
        c.max_residual = value;
        c.tol = tol;
        c.status = value <= tol ? "pass" : "fail";
        rep.checks.push_back(std::move(c));
    };
    row("isometry_defect", er.max_isometry_defect, cfg.tol);
    row("curvature_identity", er.max_identity_defect, cfg.tol);
    row("kappa1_reversal", er.max_kappa1_flip, cfg.tol);
    row("kappa2_transport", er.max_kappa2_law, cfg.tol);
    row("energy", er.max_energy, cfg.tol);
    row("curvature_invariance", er.max_curvature_defect, cfg.tol);
    CheckRow nf;
    nf.name = "halfturn_rotation_nodes";
    nf.max_residual = er.nonfinite_contents;
    nf.status = "info";
    rep.checks.push_back(std::move(nf));
    return rep;
}

ResidualReport run_bonnet(const JobConfig& cfg) {
    validate_config(cfg);
    JobConfig c = cfg;
    if (c.surface != "catenoid") c.surface = "catenoid";
    const Chart chart = build_surface(c);
    const Deformation def = bonnet_deformation(chart, cfg.alpha);
    const KinematicsEngine eng(chart, def);
    const GridScan scan{chart.domain(), cfg.grid};

    struct NodeVals {
        double ws, wd, wb, hstar, kdefect;
    };
    const auto vals = scan.values([&](const GridNode& n) {
        const KinSample ks = eng.at(n.u, n.v);
        const KinematicsEngine::ImageSample is = eng.image_sample(n.u, n.v);
        NodeVals nv{};
        nv.ws = ks.ws;
        nv.wd = ks.wd;
        nv.wb = ks.wb;
        nv.hstar = std::abs(is.Hstar);
        nv.kdefect = std::abs(ks.Kstar - ks.src.K);
        return nv;
    });

    ResidualReport rep;
    rep.job = "bonnet alpha=" + format_g17(cfg.alpha);
    const GridScan& g = scan;
    rep.checks.push_back(
        g.row(vals, [](const NodeVals& n) { return n.ws; }, "stretch_energy", cfg.tol));
    rep.checks.push_back(
        g.row(vals, [](const NodeVals& n) { return n.wd; }, "drill_energy", cfg.tol));
    rep.checks.push_back(
        g.row(vals, [](const NodeVals& n) { return n.wb; }, "bend_energy", cfg.tol));
    rep.checks.push_back(g.row(vals, [](const NodeVals& n) { return n.hstar; },
                               "image_minimality", cfg.tol));
    rep.checks.push_back(g.row(vals, [](const NodeVals& n) { return n.kdefect; },
                               "curvature_invariance", cfg.tol));
    return rep;
}

ExportSummary run_export_mesh(const JobConfig& cfg) {
    validate_config(cfg);
    if (cfg.out_dir.empty()) throw ConfigError("export-mesh requires an output directory");
    const JobGeometry geo = build_geometry(cfg);

    const ObjResult src = obj_from_chart(geo.chart(), cfg.grid.nu, cfg.grid.nv, cfg.normals);
    const std::function<Vec3(double, double)> img_pos = [&](double u, double v) {
        return geo.def.jet(u, v).y;
    };
    const std::function<Vec3(double, double)> img_nrm = [&](double u, double v) {
        const DeformationJet j = geo.def.jet(u, v);
        return normalized(cross(j.y_u, j.y_v));
    };
    const ObjResult img =
        obj_from_grid(img_pos, cfg.normals ? &img_nrm : nullptr, geo.chart().domain(),
                      cfg.grid.nu, cfg.grid.nv);

    std::filesystem::create_directories(cfg.out_dir);
    ExportSummary out;
    out.source_path = (std::filesystem::path(cfg.out_dir) / "source.obj").string();
    out.image_path = (std::filesystem::path(cfg.out_dir) / "image.obj").string();
    std::ofstream(out.source_path) << src.text;
    std::ofstream(out.image_path) << img.text;
    out.vertex_count = src.vertex_count;
    out.face_count = src.face_count;
    out.dropped_faces = src.dropped_faces + img.dropped_faces;
    return out;
}

std::string emit_report(const JobConfig& cfg, const ResidualReport& report) {
    const std::string payload =
        cfg.format == "json" ? report.to_json() : report.to_csv();
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        const std::string name = cfg.format == "json" ? "report.json" : "report.csv";
        std::ofstream((std::filesystem::path(cfg.out_dir) / name).string()) << payload;
    }
    return payload;
}

} // namespace surfkin
