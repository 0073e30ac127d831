#pragma once

#include <utility>

#include "kinconv/se3.hpp"

namespace kinconv {

/// Spatial line through `point` along the unit vector `direction`.
struct Line {
    Vec3 point;
    Vec3 direction;

    /// Normalizes the direction; throws ValidationError if it is
    /// (near-)zero or the point is not finite.
    Line(const Vec3& point_, const Vec3& direction_);

    Vec3 point_at(double t) const { return point + t * direction; }

    /// Shortest distance from a point to this line.
    double distance_to(const Vec3& p) const;

    /// Orthogonal projection of a point onto this line.
    Vec3 closest_point_to(const Vec3& p) const;
};

/// Relation between two joint-axis lines, driving frame placement.
enum class LineRelation {
    Skew,
    Parallel,            ///< parallel or anti-parallel, distinct lines
    Coincident,          ///< same line, same direction
    CoincidentOpposite,  ///< same line, opposite direction
    IntersectingAtAngle,
};

const char* to_string(LineRelation r);

/**
 * Classifies the pair of lines with tolerance `tol`:
 * same line and equal directions -> Coincident; same line, opposite
 * directions -> CoincidentOpposite; parallel directions but distinct
 * lines -> Parallel; minimum distance below tol otherwise ->
 * IntersectingAtAngle; Skew in the remaining cases.
 */
LineRelation classify_pair(const Line& l1, const Line& l2, double tol = kDefaultTol);

/**
 * Feet of the common perpendicular: first on l1, second on l2, with
 * (p2 - p1) orthogonal to both directions.
 *
 * For skew lines this is the unique nearest pair. For parallel lines the
 * foot on l1 is anchored at l1.point (converters put the previous joint
 * origin there) and the second is its projection onto l2. Throws
 * GeometryError for coincident or intersecting pairs, where no usable
 * normal exists.
 */
std::pair<Vec3, Vec3> common_perpendicular(const Line& l1, const Line& l2);

/// Intersection point of two lines meeting at an angle, within tol of
/// both; throws GeometryError if the lines do not intersect.
Vec3 intersection_point(const Line& l1, const Line& l2, double tol = kDefaultTol);

/// Point on a revolute screw's axis closest to the origin (omega x v).
/// Throws GeometryError for prismatic screws, whose axis carries no
/// position.
Vec3 screw_axis_point(const Screw& s);

/// Axis line of a revolute screw.
Line screw_axis_line(const Screw& s);

} // namespace kinconv
