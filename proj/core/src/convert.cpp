#include "kinconv/convert.hpp"

#include <cmath>
#include <utility>

#include "kinconv/line.hpp"

namespace kinconv {

namespace {

Transform frame_from_axes(const Vec3& x, const Vec3& z, const Vec3& origin) {
    Mat3 r;
    r.col(0) = x;
    r.col(1) = z.cross(x);
    r.col(2) = z;
    return Transform(r, origin);
}

/**
 * Places the DH-convention frame of the next joint given the previous
 * placed frame and the next joint's axis line. The previous frame's z
 * axis acts as the previous axis line (the base frame plays that role
 * for joint 1).
 */
Transform place_next_frame(const Transform& prev, const Line& axis, double tol) {
    const Line prev_axis(prev.translation(), prev.z_axis());
    switch (classify_pair(prev_axis, axis, tol)) {
    case LineRelation::Coincident:
        return prev;
    case LineRelation::CoincidentOpposite:
        return prev * rot_x(kPi);
    case LineRelation::IntersectingAtAngle: {
        const Vec3 origin = intersection_point(prev_axis, axis, tol);
        const Vec3 x = axis.direction.cross(prev_axis.direction).normalized();
        return frame_from_axes(x, axis.direction, origin);
    }
    case LineRelation::Parallel:
    case LineRelation::Skew: {
        const auto [on_prev, on_cur] = common_perpendicular(prev_axis, axis);
        const Vec3 x = (on_prev - on_cur).normalized();
        return frame_from_axes(x, axis.direction, on_cur);
    }
    }
    throw ConversionError("unreachable line relation");
}

struct DHParams {
    double a = 0.0;
    double d = 0.0;
    double alpha = 0.0;
    double theta = 0.0;
};

/// Closed-form DH parameters of a relative transform:
/// theta = atan2(r21, r11), alpha = atan2(r32, r33), d = tz,
/// a = tx cos(theta) + ty sin(theta).
DHParams extract_dh(const Transform& rel) {
    const Mat3& r = rel.rotation();
    const Vec3& t = rel.translation();
    DHParams p;
    p.theta = normalize_angle(std::atan2(r(1, 0), r(0, 0)));
    p.alpha = normalize_angle(std::atan2(r(2, 1), r(2, 2)));
    p.d = t.z();
    p.a = t.x() * std::cos(p.theta) + t.y() * std::sin(p.theta);
    return p;
}

Transform dh_transform(const DHParams& p) {
    return rot_z(p.theta) * trans_axis(Axis::Z, p.d) * trans_axis(Axis::X, p.a) *
           rot_x(p.alpha);
}

/// A relative transform is DH-reachable iff its (3,1) rotation entry
/// vanishes and the xy translation lies along the rotated x axis.
bool fits_dh(const Transform& rel, double tol) {
    const Mat3& r = rel.rotation();
    if (std::abs(r(2, 0)) > tol) return false;
    const Vec3& t = rel.translation();
    const double theta = std::atan2(r(1, 0), r(0, 0));
    return std::abs(-t.x() * std::sin(theta) + t.y() * std::cos(theta)) <= tol;
}

DHRow to_row(const DHParams& p, JointKind kind) {
    DHRow row;
    row.a = p.a;
    row.d = p.d;
    row.alpha = p.alpha;
    row.theta = p.theta;
    row.kind = kind;
    return row;
}

} // namespace

GJDModel dh_to_gjd(const DHModel& m, double tol) {
    require_valid(m, tol);
    GJDModel g;
    g.kinds = m.kinds();
    g.joint_frames.reserve(m.rows.size());
    Transform t = m.base_row.home();
    for (const DHRow& row : m.rows) {
        g.joint_frames.push_back(t);
        t = t * row.home();
    }
    g.tool_frame = t * m.tool;
    return g;
}

GJDModel poe_to_gjd(const PoEModel& m, double tol) {
    require_valid(m, tol);
    GJDModel g;
    g.kinds = m.kinds();
    g.joint_frames.reserve(m.screws.size());
    Transform prev;
    for (std::size_t i = 0; i < m.screws.size(); ++i) {
        // prismatic screws carry no position: anchor the axis at the
        // previously placed origin (base origin for joint 1)
        const Line axis = g.kinds[i] == JointKind::Revolute
                              ? screw_axis_line(m.screws[i])
                              : Line(prev.translation(), m.screws[i].v);
        const Transform j = place_next_frame(prev, axis, tol);
        g.joint_frames.push_back(j);
        prev = j;
    }
    g.tool_frame = m.m;
    return g;
}

GJDModel rpyxyz_to_gjd(const RpyXyzModel& m, double tol) {
    require_valid(m, tol);
    GJDModel g;
    g.kinds = m.kinds;
    g.joint_frames.reserve(m.kinds.size());
    Transform t = m.rows.front().transform();
    for (std::size_t i = 0; i < m.kinds.size(); ++i) {
        t = t * m.rows[i + 1].transform();
        g.joint_frames.push_back(t);
    }
    g.tool_frame = t * m.rows.back().transform();
    return g;
}

RpyXyzModel gjd_to_rpyxyz(const GJDModel& m, double tol) {
    require_valid(m, tol);
    RpyXyzModel out;
    out.kinds = m.kinds;
    out.rows.reserve(m.joint_frames.size() + 2);
    out.rows.emplace_back(); // base factor; GJD absorbs the base into J1
    Transform prev;
    for (const Transform& j : m.joint_frames) {
        out.rows.push_back(RpyXyzRow::from_transform(prev.inverse() * j));
        prev = j;
    }
    out.rows.push_back(RpyXyzRow::from_transform(prev.inverse() * m.tool_frame));
    return out;
}

DHModel gjd_to_dh(const GJDModel& m, double tol) {
    require_valid(m, tol);
    const std::size_t n = m.joint_count();
    DHModel out;

    if (n == 0) {
        const DHParams p = extract_dh(m.tool_frame);
        out.base_row = to_row(p, JointKind::Revolute);
        const Transform residual = dh_transform(p).inverse() * m.tool_frame;
        out.tool = residual.is_approx(Transform(), tol) ? Transform() : residual;
        return out;
    }

    // keep the input parametrization when the frames are already DH-placed
    bool direct = true;
    {
        Transform prev;
        for (const Transform& j : m.joint_frames) {
            if (!fits_dh(prev.inverse() * j, tol)) {
                direct = false;
                break;
            }
            prev = j;
        }
    }

    std::vector<Transform> frames;
    if (direct) {
        frames = m.joint_frames;
    } else {
        frames.reserve(n);
        Transform prev;
        for (std::size_t i = 0; i < n; ++i) {
            const Transform& j = m.joint_frames[i];
            const Line axis(j.translation(), j.z_axis());
            prev = place_next_frame(prev, axis, tol);
            frames.push_back(prev);
        }
    }

    out.base_row = to_row(extract_dh(frames[0]), JointKind::Revolute);
    out.rows.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out.rows.push_back(
            to_row(extract_dh(frames[i].inverse() * frames[i + 1]), m.kinds[i]));
    }

    // final row reaches for the tool; anything a DH row cannot express
    // stays behind as the exact residual tool transform
    const Transform rel = frames[n - 1].inverse() * m.tool_frame;
    const DHParams p = extract_dh(rel);
    out.rows.push_back(to_row(p, m.kinds[n - 1]));
    const Transform residual = dh_transform(p).inverse() * rel;
    out.tool = residual.is_approx(Transform(), tol) ? Transform() : residual;
    return out;
}

PoEModel gjd_to_poe(const GJDModel& m, double tol) {
    require_valid(m, tol);
    PoEModel out;
    out.m = m.tool_frame;
    out.screws.reserve(m.joint_frames.size());
    for (std::size_t i = 0; i < m.joint_frames.size(); ++i) {
        const Vec3 z = m.joint_frames[i].z_axis();
        if (m.kinds[i] == JointKind::Prismatic) {
            out.screws.emplace_back(Vec3::Zero(), z);
        } else {
            out.screws.emplace_back(z, -z.cross(m.joint_frames[i].translation()));
        }
    }
    return out;
}

GJDModel to_gjd(const AnyModel& m, double tol) {
    if (const auto* dh = std::get_if<DHModel>(&m)) return dh_to_gjd(*dh, tol);
    if (const auto* poe = std::get_if<PoEModel>(&m)) return poe_to_gjd(*poe, tol);
    if (const auto* rpy = std::get_if<RpyXyzModel>(&m)) return rpyxyz_to_gjd(*rpy, tol);
    const GJDModel& g = std::get<GJDModel>(m);
    require_valid(g, tol);
    return g;
}

AnyModel from_gjd(const GJDModel& m, Representation target, double tol) {
    switch (target) {
    case Representation::DH: return gjd_to_dh(m, tol);
    case Representation::PoE: return gjd_to_poe(m, tol);
    case Representation::RpyXyz: return gjd_to_rpyxyz(m, tol);
    case Representation::GJD: return m;
    }
    throw ConversionError("unknown target representation");
}

AnyModel convert(const AnyModel& m, Representation target, double tol) {
    return from_gjd(to_gjd(m, tol), target, tol);
}

} // namespace kinconv
