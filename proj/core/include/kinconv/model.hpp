#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kinconv/se3.hpp"

namespace kinconv {

enum class JointKind { Revolute, Prismatic };

const char* to_string(JointKind k);
std::optional<JointKind> joint_kind_from_string(const std::string& s);

/**
 * @brief One standard DH row: Rz(theta) * Tz(d) * Tx(a) * Rx(alpha).
 *
 * For a revolute joint theta is the variable and the stored value is its
 * home offset; for a prismatic joint d is the variable and the stored
 * value its home offset. The other member of the pair is a fixed link
 * constant.
 */
struct DHRow {
    double a = 0.0;
    double d = 0.0;
    double alpha = 0.0;
    double theta = 0.0;
    JointKind kind = JointKind::Revolute;

    /// Row transform with the joint displaced by q from home.
    Transform transform(double q) const;
    /// Row transform at the home configuration.
    Transform home() const { return transform(0.0); }
    /// Home offset of the joint variable (theta or d by kind).
    double home_offset() const { return kind == JointKind::Revolute ? theta : d; }
};

/**
 * @brief Standard DH table: fixed base row, one row per joint, optional
 * tool transform appended after the last row.
 */
struct DHModel {
    DHRow base_row;            ///< row 0; fixed, its kind is ignored
    std::vector<DHRow> rows;   ///< joints 1..n
    Transform tool;            ///< defaults to identity

    std::size_t joint_count() const { return rows.size(); }
    std::vector<JointKind> kinds() const;
};

/// Screw-based model: base-to-tool home transform plus one screw per joint.
/// Joint kind is inferred from the screw (omega = 0 means prismatic).
struct PoEModel {
    Transform m;
    std::vector<Screw> screws;

    std::size_t joint_count() const { return screws.size(); }
    std::vector<JointKind> kinds() const;
};

/// Partial transform Trans(x,y,z) * Rz(yaw) * Ry(pitch) * Rx(roll).
struct RpyXyzRow {
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    RpyXyzRow() = default;
    RpyXyzRow(double roll_, double pitch_, double yaw_, double x_, double y_, double z_)
        : roll(roll_), pitch(pitch_), yaw(yaw_), x(x_), y(y_), z(z_) {}

    /// Row as a transform.
    Transform transform() const;
    /// Decomposes a transform into one row.
    static RpyXyzRow from_transform(const Transform& t);
};

/**
 * @brief Chain of RPY-XYZ partial transforms.
 *
 * The first row is the base transform, rows 2..n+1 lead to the joint
 * frames, and the last row is the end-effector transform: n + 2 rows for
 * n joints. Each joint moves about/along the local z of its frame.
 */
struct RpyXyzModel {
    std::vector<RpyXyzRow> rows;
    std::vector<JointKind> kinds;

    std::size_t joint_count() const { return kinds.size(); }
};

/**
 * @brief Global joint description: the conversion hub.
 *
 * Joint frames J_1..J_n are absolute SE(3) transforms in the robot base
 * at the home configuration, each with its z axis along the joint axis,
 * plus the tool frame J_{n+1}.
 */
struct GJDModel {
    std::vector<Transform> joint_frames;
    std::vector<JointKind> kinds;
    Transform tool_frame;

    std::size_t joint_count() const { return joint_frames.size(); }
};

/// One validation finding; `location` names the offending row or field.
struct Diagnostic {
    std::string location;
    std::string message;
};

std::vector<Diagnostic> validate(const DHModel& m, double tol = kDefaultTol);
std::vector<Diagnostic> validate(const PoEModel& m, double tol = kDefaultTol);
std::vector<Diagnostic> validate(const RpyXyzModel& m, double tol = kDefaultTol);
std::vector<Diagnostic> validate(const GJDModel& m, double tol = kDefaultTol);

enum class Representation { DH, PoE, RpyXyz, GJD };

const char* to_string(Representation r);
std::optional<Representation> representation_from_string(const std::string& s);

using AnyModel = std::variant<DHModel, PoEModel, RpyXyzModel, GJDModel>;

Representation representation_of(const AnyModel& m);
std::size_t joint_count(const AnyModel& m);
std::vector<JointKind> joint_kinds(const AnyModel& m);
std::vector<Diagnostic> validate(const AnyModel& m, double tol = kDefaultTol);

/// Throws ValidationError with the first diagnostics if the model is invalid.
void require_valid(const AnyModel& m, double tol = kDefaultTol);

} // namespace kinconv
