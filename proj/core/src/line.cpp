#include "kinconv/line.hpp"

#include <cmath>

namespace kinconv {

Line::Line(const Vec3& point_, const Vec3& direction_) : point(point_) {
    if (!point.allFinite() || !direction_.allFinite()) {
        throw ValidationError("line requires finite point and direction");
    }
    const double n = direction_.norm();
    if (n < kDefaultTol) {
        throw ValidationError("line direction must be nonzero");
    }
    direction = direction_ / n;
}

double Line::distance_to(const Vec3& p) const {
    const Vec3 w = p - point;
    return (w - (w.dot(direction)) * direction).norm();
}

Vec3 Line::closest_point_to(const Vec3& p) const {
    return point + ((p - point).dot(direction)) * direction;
}

const char* to_string(LineRelation r) {
    switch (r) {
    case LineRelation::Skew: return "skew";
    case LineRelation::Parallel: return "parallel";
    case LineRelation::Coincident: return "coincident";
    case LineRelation::CoincidentOpposite: return "coincident-opposite";
    case LineRelation::IntersectingAtAngle: return "intersecting";
    }
    return "?";
}

LineRelation classify_pair(const Line& l1, const Line& l2, double tol) {
    const double dot = l1.direction.dot(l2.direction);
    const Vec3 cross = l1.direction.cross(l2.direction);
    const bool same_line =
        l1.distance_to(l2.point) < tol && l2.distance_to(l1.point) < tol;

    if (dot > 1.0 - tol && same_line) return LineRelation::Coincident;
    if (dot < -(1.0 - tol) && same_line) return LineRelation::CoincidentOpposite;
    if (cross.norm() < tol) return LineRelation::Parallel;

    const Vec3 n = cross.normalized();
    const double min_dist = std::abs((l2.point - l1.point).dot(n));
    if (min_dist < tol) return LineRelation::IntersectingAtAngle;
    return LineRelation::Skew;
}

std::pair<Vec3, Vec3> common_perpendicular(const Line& l1, const Line& l2) {
    const LineRelation rel = classify_pair(l1, l2);
    if (rel == LineRelation::Coincident || rel == LineRelation::CoincidentOpposite) {
        throw GeometryError("coincident lines have no unique common perpendicular");
    }
    if (rel == LineRelation::IntersectingAtAngle) {
        throw GeometryError("intersecting lines have a zero-length common perpendicular");
    }
    if (rel == LineRelation::Parallel) {
        const Vec3 p1 = l1.point;
        return {p1, l2.closest_point_to(p1)};
    }
    // skew: minimize |l2.point + t*d2 - l1.point - s*d1|
    const Vec3 w = l2.point - l1.point;
    const double c = l1.direction.dot(l2.direction);
    const double den = 1.0 - c * c;
    const double wd1 = w.dot(l1.direction);
    const double wd2 = w.dot(l2.direction);
    const double s = (wd1 - c * wd2) / den;
    const double t = (c * wd1 - wd2) / den;
    return {l1.point_at(s), l2.point_at(t)};
}

Vec3 intersection_point(const Line& l1, const Line& l2, double tol) {
    if (classify_pair(l1, l2, tol) != LineRelation::IntersectingAtAngle) {
        throw GeometryError("lines do not intersect");
    }
    const Vec3 w = l2.point - l1.point;
    const double c = l1.direction.dot(l2.direction);
    const double den = 1.0 - c * c;
    const double wd1 = w.dot(l1.direction);
    const double wd2 = w.dot(l2.direction);
    const double s = (wd1 - c * wd2) / den;
    const double t = (c * wd1 - wd2) / den;
    // midpoint of the (numerically tiny) nearest segment
    return 0.5 * (l1.point_at(s) + l2.point_at(t));
}

Vec3 screw_axis_point(const Screw& s) {
    if (!s.is_revolute()) {
        throw GeometryError("prismatic screw carries no axis position");
    }
    return s.omega.cross(s.v);
}

Line screw_axis_line(const Screw& s) {
    return Line(screw_axis_point(s), s.omega);
}

} // namespace kinconv
