#include "kinconv/se3.hpp"

#include <cmath>

namespace kinconv {

double normalize_angle(double angle) {
    double r = std::remainder(angle, 2.0 * kPi);
    if (r <= -kPi) r = kPi;
    return r;
}

Transform Transform::from_matrix(const Mat4& m, double tol) {
    if (!is_valid_se3(m, tol)) {
        throw ValidationError("matrix is not a valid SE(3) element");
    }
    return Transform(m.topLeftCorner<3, 3>(), m.topRightCorner<3, 1>());
}

Mat4 Transform::matrix() const {
    Mat4 m = Mat4::Identity();
    m.topLeftCorner<3, 3>() = rotation_;
    m.topRightCorner<3, 1>() = translation_;
    return m;
}

Transform rot_x(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r << 1, 0, 0,
         0, c, -s,
         0, s, c;
    return Transform(r, Vec3::Zero());
}

Transform rot_y(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r << c, 0, s,
         0, 1, 0,
         -s, 0, c;
    return Transform(r, Vec3::Zero());
}

Transform rot_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r << c, -s, 0,
         s, c, 0,
         0, 0, 1;
    return Transform(r, Vec3::Zero());
}

Transform trans_axis(Axis axis, double d) {
    Vec3 t = Vec3::Zero();
    switch (axis) {
    case Axis::X: t.x() = d; break;
    case Axis::Y: t.y() = d; break;
    case Axis::Z: t.z() = d; break;
    }
    return Transform(Mat3::Identity(), t);
}

Transform translation(double x, double y, double z) {
    return Transform(Mat3::Identity(), Vec3(x, y, z));
}

bool is_valid_se3(const Mat4& m, double tol) {
    if (!m.allFinite()) return false;
    const Mat3 r = m.topLeftCorner<3, 3>();
    if (((r.transpose() * r) - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(r.determinant() - 1.0) > tol) return false;
    const Eigen::RowVector4d bottom(0, 0, 0, 1);
    if ((m.row(3) - bottom).cwiseAbs().maxCoeff() > tol) return false;
    return true;
}

Mat3 rpy_to_rotation(double roll, double pitch, double yaw) {
    return (rot_z(yaw) * rot_y(pitch) * rot_x(roll)).rotation();
}

RollPitchYaw rotation_to_rpy(const Mat3& r) {
    RollPitchYaw out;
    double s = -r(2, 0);
    if (s > 1.0) s = 1.0;
    if (s < -1.0) s = -1.0;
    out.pitch = std::asin(s);
    if (std::abs(out.pitch) > kPi / 2 - 1e-9) {
        // gimbal lock: only yaw -/+ roll is determined; pin roll to 0
        out.roll = 0.0;
        out.yaw = normalize_angle(std::atan2(-r(0, 1), r(1, 1)));
    } else {
        out.yaw = normalize_angle(std::atan2(r(1, 0), r(0, 0)));
        out.roll = normalize_angle(std::atan2(r(2, 1), r(2, 2)));
    }
    return out;
}

Screw Screw::revolute(const Vec3& direction, const Vec3& point) {
    const double n = direction.norm();
    if (n < kDefaultTol) {
        throw ValidationError("revolute screw direction must be nonzero");
    }
    const Vec3 w = direction / n;
    return Screw(w, -w.cross(point));
}

Screw Screw::prismatic(const Vec3& direction) {
    const double n = direction.norm();
    if (n < kDefaultTol) {
        throw ValidationError("prismatic screw direction must be nonzero");
    }
    return Screw(Vec3::Zero(), direction / n);
}

namespace {

Mat3 skew(const Vec3& w) {
    Mat3 s;
    s << 0, -w.z(), w.y(),
         w.z(), 0, -w.x(),
         -w.y(), w.x(), 0;
    return s;
}

} // namespace

Transform twist_exp(const Screw& s, double q) {
    if (!s.is_valid()) {
        throw ValidationError("screw is neither unit-revolute nor prismatic");
    }
    if (s.is_prismatic()) {
        return Transform(Mat3::Identity(), q * s.v);
    }
    const Mat3 w = skew(s.omega);
    const Mat3 w2 = w * w;
    const double c = std::cos(q), sn = std::sin(q);
    const Mat3 r = Mat3::Identity() + sn * w + (1.0 - c) * w2;
    const Mat3 g = q * Mat3::Identity() + (1.0 - c) * w + (q - sn) * w2;
    return Transform(r, g * s.v);
}

} // namespace kinconv
