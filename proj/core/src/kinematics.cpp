#include "kinconv/kinematics.hpp"

#include <sstream>

namespace kinconv {

namespace {

void require_length(std::size_t joints, std::size_t got) {
    if (joints != got) {
        std::ostringstream os;
        os << "joint displacement count " << got << " does not match model joint count "
           << joints;
        throw ValidationError(os.str());
    }
}

} // namespace

Transform joint_motion(JointKind kind, double q) {
    return kind == JointKind::Revolute ? rot_z(q) : trans_axis(Axis::Z, q);
}

Transform fk_dh(const DHModel& m, const JointDisplacements& q) {
    require_length(m.joint_count(), q.size());
    Transform t = m.base_row.home();
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        t = t * m.rows[i].transform(q[i]);
    }
    return t * m.tool;
}

Transform fk_poe(const PoEModel& m, const JointDisplacements& q) {
    require_length(m.joint_count(), q.size());
    Transform t;
    for (std::size_t i = 0; i < m.screws.size(); ++i) {
        t = t * twist_exp(m.screws[i], q[i]);
    }
    return t * m.m;
}

Transform fk_rpyxyz(const RpyXyzModel& m, const JointDisplacements& q) {
    require_length(m.joint_count(), q.size());
    if (m.rows.size() != m.kinds.size() + 2) {
        throw ValidationError("rpyxyz model row count must equal joint count + 2");
    }
    Transform t = m.rows.front().transform();
    for (std::size_t i = 0; i < m.kinds.size(); ++i) {
        t = t * m.rows[i + 1].transform() * joint_motion(m.kinds[i], q[i]);
    }
    return t * m.rows.back().transform();
}

Transform fk_gjd(const GJDModel& m, const JointDisplacements& q) {
    require_length(m.joint_count(), q.size());
    Transform t;
    Transform prev;
    for (std::size_t i = 0; i < m.joint_frames.size(); ++i) {
        t = t * (prev.inverse() * m.joint_frames[i]) * joint_motion(m.kinds[i], q[i]);
        prev = m.joint_frames[i];
    }
    return t * (prev.inverse() * m.tool_frame);
}

Transform fk(const AnyModel& m, const JointDisplacements& q) {
    if (const auto* dh = std::get_if<DHModel>(&m)) return fk_dh(*dh, q);
    if (const auto* poe = std::get_if<PoEModel>(&m)) return fk_poe(*poe, q);
    if (const auto* rpy = std::get_if<RpyXyzModel>(&m)) return fk_rpyxyz(*rpy, q);
    return fk_gjd(std::get<GJDModel>(m), q);
}

} // namespace kinconv
