#pragma once

#include <Eigen/Dense>

#include "kinconv/errors.hpp"

namespace kinconv {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Default tolerance for validity checks (orthonormality, unit norms).
inline constexpr double kDefaultTol = 1e-9;
/// Tolerance for algebraic identities (inverse round trips and the like).
inline constexpr double kStrictTol = 1e-12;

constexpr double kPi = 3.141592653589793238462643383279502884;

/// Wraps an angle to (-pi, pi].
double normalize_angle(double angle);

/**
 * @brief Rigid-body transform in SE(3).
 *
 * Stored as a 3x3 rotation and a translation vector; the homogeneous
 * bottom row [0 0 0 1] is implicit. Values are immutable in practice:
 * every operation returns a new Transform, so concurrent use needs no
 * synchronization.
 *
 * The rotation columns are the frame's x, y and z axes expressed in the
 * parent frame; the translation is the frame origin.
 */
class Transform {
public:
    /// Identity transform.
    Transform() : rotation_(Mat3::Identity()), translation_(Vec3::Zero()) {}

    /// Constructs from rotation and translation. The rotation is taken
    /// as-is; use from_matrix() when the input needs checking.
    Transform(const Mat3& rotation, const Vec3& translation)
        : rotation_(rotation), translation_(translation) {}

    static Transform Identity() { return Transform(); }

    /// Builds a Transform from a homogeneous 4x4 matrix, throwing
    /// ValidationError unless is_valid_se3(m, tol).
    static Transform from_matrix(const Mat4& m, double tol = kDefaultTol);

    const Mat3& rotation() const { return rotation_; }
    const Vec3& translation() const { return translation_; }

    Vec3 x_axis() const { return rotation_.col(0); }
    Vec3 y_axis() const { return rotation_.col(1); }
    Vec3 z_axis() const { return rotation_.col(2); }

    Mat4 matrix() const;

    /// Group composition: the right operand is expressed in this frame.
    Transform operator*(const Transform& other) const {
        return Transform(rotation_ * other.rotation_,
                         rotation_ * other.translation_ + translation_);
    }

    /// Transforms a point.
    Vec3 operator*(const Vec3& p) const { return rotation_ * p + translation_; }

    Transform inverse() const {
        Mat3 rt = rotation_.transpose();
        return Transform(rt, -(rt * translation_));
    }

    bool is_approx(const Transform& other, double tol = kDefaultTol) const {
        return (rotation_ - other.rotation_).cwiseAbs().maxCoeff() <= tol &&
               (translation_ - other.translation_).cwiseAbs().maxCoeff() <= tol;
    }

private:
    Mat3 rotation_;
    Vec3 translation_;
};

inline Transform compose(const Transform& a, const Transform& b) { return a * b; }
inline Transform inverse(const Transform& t) { return t.inverse(); }

enum class Axis { X, Y, Z };

/// Pure rotation about the x axis.
Transform rot_x(double angle);
/// Pure rotation about the y axis.
Transform rot_y(double angle);
/// Pure rotation about the z axis.
Transform rot_z(double angle);

/// Pure translation of d along the given axis.
Transform trans_axis(Axis axis, double d);

/// Pure translation by (x, y, z).
Transform translation(double x, double y, double z);

/// Checks rotation orthonormality, det = +1 and the [0 0 0 1] bottom row,
/// each within tol.
bool is_valid_se3(const Mat4& m, double tol = kDefaultTol);

/// Fixed-axis XYZ rotation: R = Rz(yaw) * Ry(pitch) * Rx(roll). This is
/// the URDF `rpy` convention.
Mat3 rpy_to_rotation(double roll, double pitch, double yaw);

struct RollPitchYaw {
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;
};

/**
 * Inverse of rpy_to_rotation with pitch in [-pi/2, pi/2].
 *
 * At gimbal lock (|pitch| within 1e-9 of pi/2) roll is forced to 0 and
 * yaw absorbs the remaining angle, so the output is deterministic and
 * re-composes to the input rotation.
 */
RollPitchYaw rotation_to_rpy(const Mat3& r);

/**
 * @brief Normalized twist describing one joint axis in the base frame.
 *
 * Revolute: omega is the unit axis direction and v = -omega x q its moment,
 * with q any point on the axis. Prismatic: omega = 0 and v the unit
 * direction of translation.
 */
struct Screw {
    Vec3 omega = Vec3::Zero();
    Vec3 v = Vec3::Zero();

    Screw() = default;
    Screw(const Vec3& omega_, const Vec3& v_) : omega(omega_), v(v_) {}

    /// Revolute screw about the line through `point` along `direction`
    /// (normalized here).
    static Screw revolute(const Vec3& direction, const Vec3& point);
    /// Prismatic screw along `direction` (normalized here).
    static Screw prismatic(const Vec3& direction);
    static Screw from_vector(const Vec6& s) {
        return Screw(s.head<3>(), s.tail<3>());
    }

    Vec6 vector() const {
        Vec6 s;
        s << omega, v;
        return s;
    }

    bool is_revolute(double tol = kDefaultTol) const {
        return std::abs(omega.norm() - 1.0) <= tol;
    }
    bool is_prismatic(double tol = kDefaultTol) const {
        return omega.norm() <= tol && std::abs(v.norm() - 1.0) <= tol;
    }
    /// Exactly one of is_revolute / is_prismatic must hold.
    bool is_valid(double tol = kDefaultTol) const {
        return is_revolute(tol) != is_prismatic(tol);
    }
};

/**
 * Exponential of a screw scaled by the joint displacement q.
 *
 * Revolute screws produce a Rodrigues rotation about the axis with the
 * closed-form translation term; prismatic screws translate by q * v.
 * Throws ValidationError for invalid screws.
 */
Transform twist_exp(const Screw& s, double q);

} // namespace kinconv
