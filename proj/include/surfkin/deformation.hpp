#ifndef SURFKIN_DEFORMATION_HPP
#define SURFKIN_DEFORMATION_HPP

// Deformations of a chart: the image map y(u, v) with exact first partials,
// and, when a closed form exists, an exact 2-jet chart of the image surface.

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "surfkin/chart.hpp"

namespace surfkin {

struct DeformationJet {
    Vec3 y, y_u, y_v;
};

class Deformation {
  public:
    Deformation(std::function<DeformationJet(double, double)> eval, std::string name)
        : eval_(std::move(eval)), name_(std::move(name)) {}

    DeformationJet jet(double u, double v) const { return eval_(u, v); }
    const std::string& name() const { return name_; }

    bool has_image_chart() const { return image_.has_value(); }
    const Chart& image_chart() const;
    void set_image_chart(Chart c) { image_ = std::move(c); }

  private:
    std::function<DeformationJet(double, double)> eval_;
    std::string name_;
    std::optional<Chart> image_;
};

// y = x. Image chart is the source chart itself.
Deformation make_identity_deformation(const Chart& chart);

// y = Q x + t for a constant rotation Q.
Deformation make_rigid_deformation(const Chart& chart, const Mat3& Q, const Vec3& t = {});

// Post-compose an existing deformation with a rigid motion.
Deformation rigidly_moved(const Deformation& def, const Chart& chart, const Mat3& Q,
                          const Vec3& t = {});

// Conformal map of the flat polar annulus induced by w -> w^2 in the plane,
// x = (r cos t, r sin t, 0) -> (r^2 cos 2t, r^2 sin 2t, 0). lambda = 2 r.
Deformation make_conformal_square(const Chart& annulus);

// Latitude-dependent twist of a sphere about the polar axis; smooth but not
// an isometry. Used as a negative control.
Deformation make_sphere_twist(const Chart& sphere, double strength);

} // namespace surfkin

#endif
