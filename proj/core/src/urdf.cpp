#include "kinconv/urdf.hpp"

#include <charconv>
#include <sstream>

namespace kinconv {

namespace {

// shortest decimal form that round-trips the double exactly
std::string fmt(double v) {
    if (v == 0.0) return "0";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string vec_attr(double a, double b, double c) {
    return fmt(a) + " " + fmt(b) + " " + fmt(c);
}

void emit_origin(std::ostream& os, const Transform& t) {
    const RollPitchYaw rpy = rotation_to_rpy(t.rotation());
    const Vec3& p = t.translation();
    os << "    <origin xyz=\"" << vec_attr(p.x(), p.y(), p.z()) << "\" rpy=\""
       << vec_attr(rpy.roll, rpy.pitch, rpy.yaw) << "\"/>\n";
}

} // namespace

UrdfDocument export_urdf(const RpyXyzModel& model, const std::string& name) {
    require_valid(model);
    const std::size_t n = model.joint_count();

    std::ostringstream os;
    os << "<?xml version=\"1.0\"?>\n";
    os << "<robot name=\"" << xml_escape(name) << "\">\n";

    os << "  <link name=\"base_link\"/>\n";
    for (std::size_t i = 1; i <= n; ++i) {
        os << "  <link name=\"link_" << i << "\"/>\n";
    }
    os << "  <link name=\"tool_link\"/>\n";

    // joint 1 absorbs the base row so the document stays a plain chain
    for (std::size_t i = 1; i <= n; ++i) {
        const Transform origin =
            i == 1 ? model.rows[0].transform() * model.rows[1].transform()
                   : model.rows[i].transform();
        const JointKind kind = model.kinds[i - 1];
        os << "  <joint name=\"joint_" << i << "\" type=\"" << to_string(kind)
           << "\">\n";
        emit_origin(os, origin);
        os << "    <parent link=\""
           << (i == 1 ? std::string("base_link") : "link_" + std::to_string(i - 1))
           << "\"/>\n";
        os << "    <child link=\"link_" << i << "\"/>\n";
        os << "    <axis xyz=\"0 0 1\"/>\n";
        if (kind == JointKind::Revolute) {
            os << "    <limit lower=\"" << fmt(-2.0 * kPi) << "\" upper=\""
               << fmt(2.0 * kPi) << "\" effort=\"0\" velocity=\"0\"/>\n";
        } else {
            os << "    <limit lower=\"-1\" upper=\"1\" effort=\"0\" velocity=\"0\"/>\n";
        }
        os << "  </joint>\n";
    }

    const Transform tool_origin =
        n == 0 ? model.rows[0].transform() * model.rows[1].transform()
               : model.rows[n + 1].transform();
    os << "  <joint name=\"tool_fixed\" type=\"fixed\">\n";
    emit_origin(os, tool_origin);
    os << "    <parent link=\""
       << (n == 0 ? std::string("base_link") : "link_" + std::to_string(n)) << "\"/>\n";
    os << "    <child link=\"tool_link\"/>\n";
    os << "  </joint>\n";

    os << "</robot>\n";
    return UrdfDocument{name, os.str()};
}

} // namespace kinconv
