#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "surfkin/job.hpp"

namespace {

using surfkin::JobConfig;

struct Flags {
    std::string config;
    std::string grid;
    bool have_surface = false, have_profile = false, have_radius = false;
    bool have_zmin = false, have_zmax = false, have_alpha = false;
    bool have_tol = false, have_margin = false, have_out = false;
    bool have_format = false, have_seed = false;
    JobConfig v;  // flag values; merged over the config file
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "job config file ([surface] [deformation] [grid] [output])");
    cmd->add_option("--surface", f.v.surface)->each([&](const std::string&) { f.have_surface = true; });
    cmd->add_option("--profile", f.v.profile, "revolution profile expression in z")
        ->each([&](const std::string&) { f.have_profile = true; });
    cmd->add_option("--radius", f.v.radius)->each([&](const std::string&) { f.have_radius = true; });
    cmd->add_option("--zmin", f.v.zmin)->each([&](const std::string&) { f.have_zmin = true; });
    cmd->add_option("--zmax", f.v.zmax)->each([&](const std::string&) { f.have_zmax = true; });
    cmd->add_option("--alpha", f.v.alpha, "bending / drilling angle")
        ->each([&](const std::string&) { f.have_alpha = true; });
    cmd->add_option("--grid", f.grid, "grid size NxM");
    cmd->add_option("--tol", f.v.tol)->each([&](const std::string&) { f.have_tol = true; });
    cmd->add_option("--margin", f.v.grid.margin, "boundary cells excluded from checks")
        ->each([&](const std::string&) { f.have_margin = true; });
    cmd->add_option("--out", f.v.out_dir, "output directory")
        ->each([&](const std::string&) { f.have_out = true; });
    cmd->add_option("--format", f.v.format)->check(CLI::IsMember({"csv", "json"}))
        ->each([&](const std::string&) { f.have_format = true; });
    cmd->add_option("--seed", f.v.seed)->each([&](const std::string&) { f.have_seed = true; });
}

void parse_grid(const std::string& s, surfkin::GridSpec& g) {
    const std::size_t x = s.find('x');
    if (x == std::string::npos) throw surfkin::ConfigError("--grid expects NxM");
    try {
        g.nu = std::stoi(s.substr(0, x));
        g.nv = std::stoi(s.substr(x + 1));
    } catch (const std::exception&) {
        throw surfkin::ConfigError("--grid expects NxM");
    }
}

JobConfig resolve(const Flags& f) {
    JobConfig cfg;
    if (!f.config.empty()) surfkin::apply_config_file(cfg, f.config);
    if (f.have_surface) cfg.surface = f.v.surface;
    if (f.have_profile) cfg.profile = f.v.profile;
    if (f.have_radius) cfg.radius = f.v.radius;
    if (f.have_zmin) cfg.zmin = f.v.zmin;
    if (f.have_zmax) cfg.zmax = f.v.zmax;
    if (f.have_alpha) cfg.alpha = f.v.alpha;
    if (!f.grid.empty()) parse_grid(f.grid, cfg.grid);
    if (f.have_tol) cfg.tol = f.v.tol;
    if (f.have_margin) cfg.grid.margin = f.v.grid.margin;
    if (f.have_out) cfg.out_dir = f.v.out_dir;
    if (f.have_format) cfg.format = f.v.format;
    if (f.have_seed) cfg.seed = f.v.seed;
    return cfg;
}

int finish(const JobConfig& cfg, const surfkin::ResidualReport& rep) {
    std::cout << surfkin::emit_report(cfg, rep);
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surfkin: surface kinematics residual checks, eversions, and mesh export"};
    app.require_subcommand(1);

    Flags f;
    CLI::App* check = app.add_subcommand("check", "frame/connector compatibility residuals");
    CLI::App* analyze = app.add_subcommand("analyze", "deformation classification, energies, integrability");
    CLI::App* evert = app.add_subcommand("evert", "pure-bending eversion of a surface of revolution");
    CLI::App* bonnet = app.add_subcommand("bonnet", "isometric drilling of the catenoid");
    CLI::App* exp = app.add_subcommand("export-mesh", "write source/image OBJ meshes");
    for (CLI::App* c : {check, analyze, evert, bonnet, exp}) add_common(c, f);
    std::string deformation;
    for (CLI::App* c : {analyze, exp})
        c->add_option("--deformation", deformation,
                      "identity|rotation|bonnet|eversion|conformal-square");
    bool with_normals = false;
    exp->add_flag("--normals", with_normals, "emit per-vertex normals");

    CLI11_PARSE(app, argc, argv);

    try {
        JobConfig cfg = resolve(f);
        if (!deformation.empty()) cfg.deformation = deformation;
        if (with_normals) cfg.normals = true;
        if (check->parsed()) return finish(cfg, surfkin::run_check(cfg));
        if (analyze->parsed()) return finish(cfg, surfkin::run_analyze(cfg));
        if (evert->parsed()) return finish(cfg, surfkin::run_evert(cfg));
        if (bonnet->parsed()) return finish(cfg, surfkin::run_bonnet(cfg));
        const surfkin::ExportSummary s = surfkin::run_export_mesh(cfg);
        std::cout << "wrote " << s.source_path << " and " << s.image_path << ": "
                  << s.vertex_count << " vertices, " << s.face_count << " faces";
        if (s.dropped_faces > 0)
            std::cout << " (warning: dropped " << s.dropped_faces << " degenerate faces)";
        std::cout << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
