#include "surfkin/metric_classes.hpp"

#include <algorithm>
#include <cmath>

#include "surfkin/errors.hpp"

namespace surfkin {

ClassificationReport classify(const KinematicsEngine& eng, const GridSpec& grid, double tol) {
    struct NodeDefects {
        double conf, area, iso, lhat;
    };
    const Domain& dom = eng.chart().domain();
    const auto defects = map_interior<NodeDefects>(dom, grid, [&](const GridNode& n) {
        const ChartSample s = sample(eng.chart(), n.u, n.v);
        const PolarData pd = eng.polar(n.u, n.v);
        const double lhat = std::sqrt(0.5 * trace(pd.C));
        NodeDefects d;
        d.conf = norm(pd.C - lhat * lhat * s.P);
        d.area = std::abs(pd.lambda1 * pd.lambda2 - 1.0);
        d.iso = norm(pd.C - s.P);
        d.lhat = lhat;
        return d;
    });

    ClassificationReport rep;
    rep.tol = tol;
    rep.lambda.reserve(defects.size());
    for (const NodeDefects& d : defects) {
        rep.conformal_defect = std::max(rep.conformal_defect, d.conf);
        rep.isoareal_defect = std::max(rep.isoareal_defect, d.area);
        rep.isometric_defect = std::max(rep.isometric_defect, d.iso);
        rep.lambda.push_back(d.lhat);
    }
    rep.conformal = rep.conformal_defect < tol;
    rep.isoareal = rep.isoareal_defect < tol;
    rep.isometric = rep.isometric_defect < tol;
    if (rep.isometric && !(rep.conformal && rep.isoareal))
        throw InternalConsistencyError("isometric flag without conformal and isoareal flags");
    return rep;
}

ConformalCurvatureResiduals conformal_curvature_residual(const KinematicsEngine& eng,
                                                         double u, double v) {
    const KinSample ks = eng.at(u, v);
    ConformalCurvatureResiduals out;
    out.lambda = 0.5 * (ks.pd.lambda1 + ks.pd.lambda2);
    const double l2 = out.lambda * out.lambda;

    const double lap_phi = surface_laplacian(
        eng.chart(),
        [&](double uu, double vv) {
            const PolarData p = eng.polar(uu, vv);
            return std::log(0.5 * (p.lambda1 + p.lambda2));
        },
        u, v, eng.options().fd);

    // independent image curvature when a closed-form image chart exists
    const double Kstar =
        eng.deformation().has_image_chart() ? eng.image_sample(u, v).Kstar : ks.Kstar;

    out.divided = Kstar - (ks.src.K - lap_phi) / l2;
    out.exponential = lap_phi + Kstar * l2 - ks.src.K;
    // the forms are the same identity scaled by lambda^2
    if (std::abs(out.exponential - l2 * out.divided) >
        1e-12 * std::max(1.0, std::abs(out.exponential)))
        throw InternalConsistencyError("conformal curvature law forms disagree algebraically");
    return out;
}

EgregiumReport theorema_egregium_check(const KinematicsEngine& eng, const GridSpec& grid) {
    const Domain& dom = eng.chart().domain();
    struct NodeVals {
        double dk, drill;
    };
    const auto vals = map_interior<NodeVals>(dom, grid, [&](const GridNode& n) {
        const KinSample ks = eng.at(n.u, n.v);
        const double Kstar =
            eng.deformation().has_image_chart() ? eng.image_sample(n.u, n.v).Kstar : ks.Kstar;
        return NodeVals{std::abs(Kstar - ks.src.K), norm(ks.a3)};
    });
    EgregiumReport rep;
    for (const NodeVals& nv : vals) {
        rep.max_curvature_defect = std::max(rep.max_curvature_defect, nv.dk);
        rep.max_drill = std::max(rep.max_drill, nv.drill);
    }
    return rep;
}

RigidityReport frame_indifference_rigidity(const KinematicsEngine& eng, const GridSpec& grid,
                                           double tol) {
    const Domain& dom = eng.chart().domain();
    struct NodeVals {
        double indiff, hnorm;
    };
    const auto vals = map_interior<NodeVals>(dom, grid, [&](const GridNode& n) {
        const KinSample ks = eng.at(n.u, n.v);
        const KinematicsEngine::ImageSample is = eng.image_sample(n.u, n.v);
        const Mat3& R = ks.pd.R;
        const double indiff = norm(is.dsnu_star - R * ks.src.dsnu * transpose(R));
        return NodeVals{indiff, norm(ks.H)};
    });
    RigidityReport rep;
    for (const NodeVals& nv : vals) {
        rep.max_indifference = std::max(rep.max_indifference, nv.indiff);
        rep.max_H = std::max(rep.max_H, nv.hnorm);
    }
    rep.antecedent = rep.max_indifference < tol;
    rep.implication_ok = !rep.antecedent || rep.max_H < tol;
    return rep;
}

} // namespace surfkin
