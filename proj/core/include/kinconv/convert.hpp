#pragma once

#include "kinconv/model.hpp"

namespace kinconv {

/**
 * @brief Conversions between the four representations, all routed through
 * the global joint description (GJD) hub.
 *
 * Every conversion preserves forward kinematics. Revolute joint axis
 * lines are preserved exactly; for prismatic joints only the direction
 * survives, since a prismatic screw carries no position.
 */

/// Accumulates the DH partial transforms at home into absolute joint
/// frames; the tool frame is the full home product times the tool.
GJDModel dh_to_gjd(const DHModel& m, double tol = kDefaultTol);

/**
 * Places DH-convention frames on the screw axis lines.
 *
 * Revolute axes get their position from the screw moment; a prismatic
 * axis is anchored at the previously placed joint origin (the base origin
 * for joint 1). Frames are placed against the previous frame by the
 * line-pair relation: coincident lines share the frame, opposite
 * coincident lines flip about x, intersecting lines meet at the
 * intersection point, and skew or parallel lines sit on the common
 * perpendicular. The tool frame equals m exactly.
 */
GJDModel poe_to_gjd(const PoEModel& m, double tol = kDefaultTol);

/// Accumulates the partial rows (base row included) into absolute frames.
GJDModel rpyxyz_to_gjd(const RpyXyzModel& m, double tol = kDefaultTol);

/// Decomposes consecutive relative transforms into RPY-XYZ rows; the
/// first row is the identity base factor, the last row reaches the tool.
RpyXyzModel gjd_to_rpyxyz(const GJDModel& m, double tol = kDefaultTol);

/**
 * Extracts a DH table.
 *
 * If every consecutive relative transform already fits the DH structure
 * the parameters are read off directly, preserving the input
 * parametrization. Otherwise the joint axis lines are first re-framed
 * with the same placement rules as poe_to_gjd. A tool frame that no DH
 * row can reach yields a best-fit final row plus the exact residual as
 * the tool transform, so forward kinematics always matches the input.
 */
DHModel gjd_to_dh(const GJDModel& m, double tol = kDefaultTol);

/// Reads the screws off the joint frames: revolute S = (z, -z x origin),
/// prismatic S = (0, z). m equals the tool frame exactly.
PoEModel gjd_to_poe(const GJDModel& m, double tol = kDefaultTol);

/// Converts any model to the hub representation.
GJDModel to_gjd(const AnyModel& m, double tol = kDefaultTol);

/// Converts the hub representation to any target.
AnyModel from_gjd(const GJDModel& m, Representation target, double tol = kDefaultTol);

/// Hub-and-spoke conversion: source -> GJD -> target.
AnyModel convert(const AnyModel& m, Representation target, double tol = kDefaultTol);

} // namespace kinconv
