#include "surfkin/mesh_export.hpp"

#include <sstream>
#include <vector>

#include "surfkin/errors.hpp"
#include "surfkin/frame.hpp"
#include "surfkin/report.hpp"

namespace surfkin {

ObjResult obj_from_grid(const std::function<Vec3(double, double)>& position,
                        const std::function<Vec3(double, double)>* normal,
                        const Domain& dom, int nu, int nv) {
    if (nu < 1 || nv < 1) throw ConfigError("mesh grid must be at least 1x1");

    const int rows = nu + 1, cols = nv + 1;
    std::vector<Vec3> verts;
    verts.reserve(static_cast<std::size_t>(rows) * cols);
    std::ostringstream os;
    double scale = 0.0;
    for (int i = 0; i < rows; ++i) {
        const double u = dom.u0 + dom.span_u() * i / nu;
        for (int j = 0; j < cols; ++j) {
            const double v = dom.v0 + dom.span_v() * j / nv;
            const Vec3 p = position(u, v);
            verts.push_back(p);
            os << "v " << format_g17(p.x) << ' ' << format_g17(p.y) << ' '
               << format_g17(p.z) << '\n';
            scale += norm(p);
        }
    }
    scale = scale / static_cast<double>(verts.size()) + 1.0;

    if (normal) {
        for (int i = 0; i < rows; ++i) {
            const double u = dom.u0 + dom.span_u() * i / nu;
            for (int j = 0; j < cols; ++j) {
                const double v = dom.v0 + dom.span_v() * j / nv;
                const Vec3 n = (*normal)(u, v);
                os << "vn " << format_g17(n.x) << ' ' << format_g17(n.y) << ' '
                   << format_g17(n.z) << '\n';
            }
        }
    }

    ObjResult out;
    out.vertex_count = static_cast<int>(verts.size());
    const double area_tol = 1e-14 * scale * scale;
    const auto idx = [cols](int i, int j) { return i * cols + j; };
    const auto emit = [&](int a, int b, int c) {
        const Vec3 n = cross(verts[b] - verts[a], verts[c] - verts[a]);
        if (0.5 * norm(n) <= area_tol) {
            ++out.dropped_faces;
            return;
        }
        os << "f " << a + 1 << ' ' << b + 1 << ' ' << c + 1 << '\n';
        ++out.face_count;
    };
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            emit(idx(i, j), idx(i + 1, j), idx(i + 1, j + 1));
            emit(idx(i, j), idx(i + 1, j + 1), idx(i, j + 1));
        }
    out.text = os.str();
    return out;
}

ObjResult obj_from_chart(const Chart& chart, int nu, int nv, bool normals) {
    const std::function<Vec3(double, double)> pos = [&chart](double u, double v) {
        return chart.jet(u, v).r;
    };
    if (!normals) return obj_from_grid(pos, nullptr, chart.domain(), nu, nv);
    const std::function<Vec3(double, double)> nrm = [&chart](double u, double v) {
        return sample(chart, u, v).basis.nu;
    };
    return obj_from_grid(pos, &nrm, chart.domain(), nu, nv);
}

} // namespace surfkin
