#include "kinconv/model.hpp"

#include <cmath>
#include <sstream>

namespace kinconv {

const char* to_string(JointKind k) {
    return k == JointKind::Revolute ? "revolute" : "prismatic";
}

std::optional<JointKind> joint_kind_from_string(const std::string& s) {
    if (s == "revolute") return JointKind::Revolute;
    if (s == "prismatic") return JointKind::Prismatic;
    return std::nullopt;
}

Transform DHRow::transform(double q) const {
    const double th = kind == JointKind::Revolute ? theta + q : theta;
    const double dd = kind == JointKind::Prismatic ? d + q : d;
    return rot_z(th) * trans_axis(Axis::Z, dd) * trans_axis(Axis::X, a) * rot_x(alpha);
}

std::vector<JointKind> DHModel::kinds() const {
    std::vector<JointKind> out;
    out.reserve(rows.size());
    for (const DHRow& r : rows) out.push_back(r.kind);
    return out;
}

std::vector<JointKind> PoEModel::kinds() const {
    std::vector<JointKind> out;
    out.reserve(screws.size());
    for (const Screw& s : screws) {
        out.push_back(s.omega.norm() <= kDefaultTol ? JointKind::Prismatic
                                                    : JointKind::Revolute);
    }
    return out;
}

Transform RpyXyzRow::transform() const {
    return Transform(rpy_to_rotation(roll, pitch, yaw), Vec3(x, y, z));
}

RpyXyzRow RpyXyzRow::from_transform(const Transform& t) {
    const RollPitchYaw rpy = rotation_to_rpy(t.rotation());
    const Vec3& p = t.translation();
    return RpyXyzRow(rpy.roll, rpy.pitch, rpy.yaw, p.x(), p.y(), p.z());
}

namespace {

std::string row_field(const char* container, std::size_t i, const char* field = nullptr) {
    std::ostringstream os;
    os << container << "[" << i << "]";
    if (field) os << "." << field;
    return os.str();
}

bool finite(double v) { return std::isfinite(v); }

void check_transform(std::vector<Diagnostic>& out, const Transform& t,
                     const std::string& where, double tol) {
    if (!t.rotation().allFinite() || !t.translation().allFinite()) {
        out.push_back({where, "transform has non-finite entries"});
        return;
    }
    const Mat3& r = t.rotation();
    if (((r.transpose() * r) - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) {
        out.push_back({where, "rotation is not orthonormal"});
    } else if (r.determinant() < 0.0) {
        out.push_back({where, "improper rotation (det = -1)"});
    } else if (std::abs(r.determinant() - 1.0) > tol) {
        out.push_back({where, "rotation determinant deviates from +1"});
    }
}

} // namespace

std::vector<Diagnostic> validate(const DHModel& m, double tol) {
    std::vector<Diagnostic> out;
    auto check_row = [&](const DHRow& r, const std::string& where) {
        if (!finite(r.a) || !finite(r.d) || !finite(r.alpha) || !finite(r.theta)) {
            out.push_back({where, "row has non-finite parameters"});
        }
    };
    check_row(m.base_row, "base");
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        check_row(m.rows[i], row_field("rows", i));
    }
    check_transform(out, m.tool, "tool", tol);
    return out;
}

std::vector<Diagnostic> validate(const PoEModel& m, double tol) {
    std::vector<Diagnostic> out;
    check_transform(out, m.m, "m", tol);
    for (std::size_t i = 0; i < m.screws.size(); ++i) {
        const Screw& s = m.screws[i];
        if (!s.omega.allFinite() || !s.v.allFinite()) {
            out.push_back({row_field("screws", i), "screw has non-finite entries"});
        } else if (!s.is_valid(tol)) {
            out.push_back({row_field("screws", i),
                           "screw neither unit-revolute nor prismatic"});
        }
    }
    return out;
}

std::vector<Diagnostic> validate(const RpyXyzModel& m, double tol) {
    (void)tol;
    std::vector<Diagnostic> out;
    if (m.rows.size() < 2) {
        out.push_back({"rows", "need at least a base row and a tool row"});
    } else if (m.rows.size() != m.kinds.size() + 2) {
        out.push_back({"rows", "row count must equal joint count + 2"});
    }
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        const RpyXyzRow& r = m.rows[i];
        if (!finite(r.roll) || !finite(r.pitch) || !finite(r.yaw) ||
            !finite(r.x) || !finite(r.y) || !finite(r.z)) {
            out.push_back({row_field("rows", i), "row has non-finite parameters"});
        }
    }
    return out;
}

std::vector<Diagnostic> validate(const GJDModel& m, double tol) {
    std::vector<Diagnostic> out;
    if (m.joint_frames.size() != m.kinds.size()) {
        out.push_back({"kinds", "kind count must equal joint frame count"});
    }
    for (std::size_t i = 0; i < m.joint_frames.size(); ++i) {
        check_transform(out, m.joint_frames[i], row_field("frames", i), tol);
    }
    check_transform(out, m.tool_frame, "tool", tol);
    return out;
}

const char* to_string(Representation r) {
    switch (r) {
    case Representation::DH: return "dh";
    case Representation::PoE: return "poe";
    case Representation::RpyXyz: return "rpyxyz";
    case Representation::GJD: return "gjd";
    }
    return "?";
}

std::optional<Representation> representation_from_string(const std::string& s) {
    if (s == "dh") return Representation::DH;
    if (s == "poe") return Representation::PoE;
    if (s == "rpyxyz") return Representation::RpyXyz;
    if (s == "gjd") return Representation::GJD;
    return std::nullopt;
}

Representation representation_of(const AnyModel& m) {
    switch (m.index()) {
    case 0: return Representation::DH;
    case 1: return Representation::PoE;
    case 2: return Representation::RpyXyz;
    default: return Representation::GJD;
    }
}

std::size_t joint_count(const AnyModel& m) {
    return std::visit([](const auto& model) { return model.joint_count(); }, m);
}

std::vector<JointKind> joint_kinds(const AnyModel& m) {
    if (const auto* dh = std::get_if<DHModel>(&m)) return dh->kinds();
    if (const auto* poe = std::get_if<PoEModel>(&m)) return poe->kinds();
    if (const auto* rpy = std::get_if<RpyXyzModel>(&m)) return rpy->kinds;
    return std::get<GJDModel>(m).kinds;
}

std::vector<Diagnostic> validate(const AnyModel& m, double tol) {
    return std::visit([tol](const auto& model) { return validate(model, tol); }, m);
}

void require_valid(const AnyModel& m, double tol) {
    const std::vector<Diagnostic> diags = validate(m, tol);
    if (diags.empty()) return;
    std::ostringstream os;
    os << "invalid " << to_string(representation_of(m)) << " model:";
    for (const Diagnostic& d : diags) os << " [" << d.location << "] " << d.message << ";";
    throw ValidationError(os.str());
}

} // namespace kinconv
