#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "surfkin/job.hpp"
#include "surfkin/mesh_export.hpp"
#include "surfkin/profile_expr.hpp"
#include "surfkin/report.hpp"

using namespace surfkin;

TEST_CASE("profile expressions evaluate with exact derivatives") {
    {
        const ProfileExpr e = parse_profile("cosh(z)");
        const Dual2 d = e.eval(0.0);
        CHECK(d.v == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(d.d == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(d.dd == doctest::Approx(1.0).epsilon(1e-15));
    }
    {
        // (rho, rho', rho'') = (1.8, 0.8, 0.4) at z = 2 by hand differentiation
        const ProfileExpr e = parse_profile("1 + 0.2*z^2");
        const Dual2 d = e.eval(2.0);
        CHECK(d.v == doctest::Approx(1.8).epsilon(1e-15));
        CHECK(d.d == doctest::Approx(0.8).epsilon(1e-15));
        CHECK(d.dd == doctest::Approx(0.4).epsilon(1e-15));
    }
    // ^ binds right-to-left
    CHECK(parse_profile("2^3^2").eval(0.0).v == doctest::Approx(512.0));
    // unary minus binds looser than ^
    CHECK(parse_profile("-z^2").eval(3.0).v == doctest::Approx(-9.0));
    CHECK(parse_profile("2^-1").eval(0.0).v == doctest::Approx(0.5));
    CHECK(parse_profile("sin(z)/cos(z)").eval(0.7).v == doctest::Approx(std::tan(0.7)));
    CHECK(parse_profile("sqrt(exp(log(z)))").eval(4.0).v == doctest::Approx(2.0));
    CHECK(parse_profile("  ( 1+ z ) * 2 ").eval(1.5).v == doctest::Approx(5.0));
}

TEST_CASE("profile parse errors carry byte offsets") {
    const auto offset_of = [](const std::string& s) -> std::size_t {
        try {
            parse_profile(s);
        } catch (const ParseError& e) {
            return e.offset;
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("2*") == 2);
    CHECK(offset_of("(1+z") == 4);
    CHECK(offset_of("1 + + 2") != static_cast<std::size_t>(-1));
    CHECK(offset_of("tan(z)") == 0);
    CHECK(offset_of("1 2") == 2);
    CHECK_THROWS_AS(parse_profile(""), ParseError);
    CHECK_THROWS_AS((void)parse_profile("log(z - 1)").eval(0.5), NumericalError);
    CHECK_THROWS_AS((void)parse_profile("sqrt(z - 1)").eval(0.5), NumericalError);
    CHECK_THROWS_AS((void)parse_profile("1/(z - 1)").eval(1.0), NumericalError);
}

TEST_CASE("pretty-printed profiles reparse to the identical tree") {
    for (const char* s : {"cosh(z)", "1 + 0.2*z^2", "-z^3 - sin(z*z)/(1 + z^2)",
                          "sqrt(1 - z^2)", "2^3^z", "-(z + 1)*(z - 1)",
                          "exp(-z)*log(z + 2)"}) {
        const ProfileExpr a = parse_profile(s);
        const ProfileExpr b = parse_profile(a.pretty());
        CHECK(same_ast(a, b));
        CHECK(a.pretty() == b.pretty());
        // and the trees agree numerically
        CHECK(a.eval(0.3).v == doctest::Approx(b.eval(0.3).v).epsilon(1e-15));
    }
    CHECK_FALSE(same_ast(parse_profile("z + 1"), parse_profile("1 + z")));
}

TEST_CASE("config file sections populate the job, flags win by reapplication") {
    JobConfig cfg;
    apply_config_text(cfg, R"(
# job description
[surface]
kind = catenoid
zmin = -0.5
zmax = 1.5

[deformation]
kind = bonnet
alpha = 0.75

[grid]
nu = 24
nv = 16
margin = 3
tol = 1e-6

[output]
dir = /tmp/x
format = json
)");
    CHECK(cfg.surface == "catenoid");
    CHECK(cfg.zmin == -0.5);
    CHECK(cfg.zmax == 1.5);
    CHECK(cfg.deformation == "bonnet");
    CHECK(cfg.alpha == 0.75);
    CHECK(cfg.grid.nu == 24);
    CHECK(cfg.grid.nv == 16);
    CHECK(cfg.grid.margin == 3);
    CHECK(cfg.tol == 1e-6);
    CHECK(cfg.out_dir == "/tmp/x");
    CHECK(cfg.format == "json");

    // a later assignment (how flag overrides are applied) wins
    apply_config_text(cfg, "[grid]\nnu = 48\n");
    CHECK(cfg.grid.nu == 48);
    CHECK(cfg.grid.nv == 16);

    CHECK_THROWS_AS(apply_config_text(cfg, "[surface]\nbogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "[nosuch]\nkind = x\n"), ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "left right\n"), ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "[grid]\nnu = abc\n"), ConfigError);

    JobConfig tiny;
    tiny.grid.nu = 4;
    CHECK_THROWS_AS(validate_config(tiny), ConfigError);
    JobConfig badfmt;
    badfmt.format = "xml";
    CHECK_THROWS_AS(validate_config(badfmt), ConfigError);
}

TEST_CASE("report serialization is deterministic and schema-tagged") {
    ResidualReport rep;
    rep.job = "demo";
    ResidualAccumulator acc;
    acc.add(1e-9, 0.1, 0.2);
    acc.add(3e-8, 0.3, 0.4);
    acc.add(2e-9, 0.5, 0.6);
    rep.checks.push_back(acc.finish("alpha", 1e-6));
    CheckRow skip;
    skip.name = "beta";
    skip.status = "skipped (non-orthogonal)";
    rep.checks.push_back(skip);

    CHECK(rep.all_pass());
    const std::string csv = rep.to_csv();
    CHECK(csv == rep.to_csv());
    CHECK(csv.find("check,max_residual,mean_residual,min_residual,worst_u,worst_v,"
                    "tolerance,status") == 0);
    CHECK(csv.find("alpha,2.9999999999999997e-08,") != std::string::npos);
    CHECK(csv.find("\"skipped (non-orthogonal)\"") != std::string::npos);

    const std::string json = rep.to_json();
    CHECK(json == rep.to_json());
    CHECK(json.find("\"schema\": 1") != std::string::npos);
    CHECK(json.find("\"pass\": true") != std::string::npos);

    rep.checks[0].status = "fail";
    CHECK_FALSE(rep.all_pass());

    const CheckRow& a = rep.checks[0];
    CHECK(a.max_residual == 3e-8);
    CHECK(a.min_residual == 1e-9);
    CHECK(a.worst_u == 0.3);
    CHECK(a.worst_v == 0.4);
    CHECK(a.mean_residual == doctest::Approx((1e-9 + 3e-8 + 2e-9) / 3));
}

TEST_CASE("OBJ grids carry exact counts and drop degenerate faces") {
    // n x m cells -> (n+1)(m+1) vertices, 2nm triangles
    const Chart sph = make_sphere(1.0);
    const ObjResult r = obj_from_chart(sph, 16, 16, false);
    CHECK(r.vertex_count == 289);
    CHECK(r.face_count == 512);
    CHECK(r.dropped_faces == 0);
    CHECK(r.text == obj_from_chart(sph, 16, 16, false).text);
    CHECK(r.text.find("v ") == 0);
    CHECK(r.text.find("vn ") == std::string::npos);
    CHECK(r.text.find("f 1 18 19\n") != std::string::npos);
    CHECK(r.text.find("f 1 19 2\n") != std::string::npos);

    const ObjResult rn = obj_from_chart(sph, 8, 8, true);
    CHECK(rn.text.find("vn ") != std::string::npos);

    // a position field collapsed onto a line makes every triangle degenerate
    const std::function<Vec3(double, double)> flat = [](double u, double) {
        return Vec3{u, 0.0, 0.0};
    };
    const ObjResult bad = obj_from_grid(flat, nullptr, Domain{0, 1, 0, 1}, 2, 2);
    CHECK(bad.face_count == 0);
    CHECK(bad.dropped_faces == 8);

    CHECK_THROWS_AS(obj_from_grid(flat, nullptr, Domain{0, 1, 0, 1}, 0, 4), ConfigError);
}

TEST_CASE("check and analyze jobs assemble passing reports") {
    JobConfig cfg;
    cfg.surface = "torus";
    cfg.radius = 2.0;
    cfg.minor = 0.7;
    cfg.grid.nu = cfg.grid.nv = 12;
    cfg.tol = 1e-5;
    const ResidualReport rep = run_check(cfg);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 6);
    for (const CheckRow& c : rep.checks) CHECK(c.status == "pass");

    // a sheared plane is a valid immersion with non-orthogonal coordinates
    const Chart sheared(
        ChartKind::Custom, Domain{0, 1, 0, 1},
        [](double u, double v) {
            ChartJet j;
            j.r = {u + 0.5 * v, v, 0.0};
            j.r_u = {1.0, 0.0, 0.0};
            j.r_v = {0.5, 1.0, 0.0};
            return j;
        },
        "sheared-plane");
    const ResidualReport srep = run_check(cfg, sheared);
    bool found = false;
    for (const CheckRow& c : srep.checks)
        if (c.name == "metric_curvature_agreement") {
            found = true;
            CHECK(c.status == "skipped (non-orthogonal)");
        }
    CHECK(found);
    CHECK(srep.all_pass());

    JobConfig an;
    an.surface = "annulus";
    an.zmin = 0.5;
    an.zmax = 1.5;
    an.deformation = "conformal-square";
    an.grid.nu = an.grid.nv = 12;
    an.tol = 1e-5;
    const ResidualReport arep = run_analyze(an);
    CHECK(arep.all_pass());
    bool conformal = false, law = false;
    for (const CheckRow& c : arep.checks) {
        if (c.name == "class_conformal") conformal = (c.status == "true");
        if (c.name == "conformal_curvature_law") law = (c.status == "pass");
    }
    CHECK(conformal);
    CHECK(law);
}

TEST_CASE("evert and bonnet jobs report pass on the catalog families") {
    JobConfig ev;
    ev.surface = "catenoid";  // implied profile cosh(z)
    ev.zmin = 0.0;
    ev.zmax = 2.0;
    ev.grid.nu = ev.grid.nv = 12;
    ev.tol = 1e-5;
    const ResidualReport erep = run_evert(ev);
    CHECK(erep.all_pass());
    for (const CheckRow& c : erep.checks)
        if (c.status != "info") CHECK(c.status == "pass");

    JobConfig bn;
    bn.alpha = 1.1;
    bn.zmin = -1.0;
    bn.zmax = 1.0;
    bn.grid.nu = bn.grid.nv = 12;
    bn.tol = 1e-6;
    const ResidualReport brep = run_bonnet(bn);
    CHECK(brep.all_pass());

    JobConfig bad = ev;
    bad.surface = "torus";
    bad.profile.clear();
    CHECK_THROWS_AS(run_evert(bad), ConfigError);
}
