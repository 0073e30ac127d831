#pragma once

#include "kinconv/model.hpp"

namespace kinconv {

/// Joint displacements from the home configuration: radians for revolute
/// joints, meters for prismatic ones. Length must match the joint count.
using JointDisplacements = std::vector<double>;

/// Motion of one joint about/along the local z axis of its frame.
Transform joint_motion(JointKind kind, double q);

/// Forward kinematics of a DH table: base row, then each row with its
/// variable displaced by q[i], then the tool transform.
Transform fk_dh(const DHModel& m, const JointDisplacements& q);

/// Product of twist exponentials in joint order, right-multiplied by m.
Transform fk_poe(const PoEModel& m, const JointDisplacements& q);

/// Chain of partial row transforms with every joint acting about/along
/// the local z of its frame.
Transform fk_rpyxyz(const RpyXyzModel& m, const JointDisplacements& q);

/// Hub evaluator over consecutive relative transforms of the joint frames.
Transform fk_gjd(const GJDModel& m, const JointDisplacements& q);

/// Dispatch over any representation.
Transform fk(const AnyModel& m, const JointDisplacements& q);

} // namespace kinconv
