#include "kinconv/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kinconv {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    throw ParseError(where.empty() ? what : where + ": " + what);
}

const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) parse_fail(key, "missing field");
    return *it;
}

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) parse_fail(where, "expected a number");
    return j.get<double>();
}

std::vector<double> number_array(const json& j, const std::string& where,
                                 std::size_t expected,
                                 const char* size_message) {
    if (!j.is_array()) parse_fail(where, "expected an array");
    if (expected != 0 && j.size() != expected) parse_fail(where, size_message);
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(number_at(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

JointKind kind_at(const json& j, const std::string& where) {
    if (!j.is_string()) parse_fail(where, "joint kind must be \"revolute\" or \"prismatic\"");
    const auto kind = joint_kind_from_string(j.get<std::string>());
    if (!kind) parse_fail(where, "joint kind must be \"revolute\" or \"prismatic\"");
    return *kind;
}

Mat4 matrix_at(const json& j, const std::string& where,
               std::vector<Diagnostic>& diagnostics, double tol) {
    const std::vector<double> v =
        number_array(j, where, 16, "matrix must have 16 row-major components");
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = v[4 * r + c];
    const Eigen::RowVector4d bottom(0, 0, 0, 1);
    if (!m.row(3).allFinite() || (m.row(3) - bottom).cwiseAbs().maxCoeff() > tol) {
        diagnostics.push_back({where, "bottom row must be [0 0 0 1]"});
    }
    return m;
}

Transform transform_from(const Mat4& m) {
    return Transform(m.topLeftCorner<3, 3>(), m.topRightCorner<3, 1>());
}

AnyModel parse_payload(const json& j, Representation rep,
                       std::vector<Diagnostic>& diagnostics, double tol) {
    switch (rep) {
    case Representation::DH: {
        DHModel m;
        const std::vector<double> base =
            number_array(require_field(j, "base"), "base", 4,
                         "base row must have 4 components [a, d, alpha, theta]");
        m.base_row = DHRow{base[0], base[1], base[2], base[3], JointKind::Revolute};
        const json& rows = require_field(j, "rows");
        if (!rows.is_array()) parse_fail("rows", "expected an array");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string where = "rows[" + std::to_string(i) + "]";
            const json& row = rows[i];
            if (!row.is_array() || row.size() != 5) {
                parse_fail(where, "row must be [a, d, alpha, theta, kind]");
            }
            DHRow r;
            r.a = number_at(row[0], where + "[0]");
            r.d = number_at(row[1], where + "[1]");
            r.alpha = number_at(row[2], where + "[2]");
            r.theta = number_at(row[3], where + "[3]");
            r.kind = kind_at(row[4], where + "[4]");
            m.rows.push_back(r);
        }
        if (j.contains("tool")) {
            m.tool = transform_from(matrix_at(j["tool"], "tool", diagnostics, tol));
        }
        return m;
    }
    case Representation::PoE: {
        PoEModel m;
        m.m = transform_from(matrix_at(require_field(j, "m"), "m", diagnostics, tol));
        const json& screws = require_field(j, "screws");
        if (!screws.is_array()) parse_fail("screws", "expected an array");
        for (std::size_t i = 0; i < screws.size(); ++i) {
            const std::string where = "screws[" + std::to_string(i) + "]";
            const std::vector<double> s =
                number_array(screws[i], where, 6, "screw must have 6 components");
            m.screws.emplace_back(Vec3(s[0], s[1], s[2]), Vec3(s[3], s[4], s[5]));
        }
        return m;
    }
    case Representation::RpyXyz: {
        RpyXyzModel m;
        const json& rows = require_field(j, "rows");
        if (!rows.is_array()) parse_fail("rows", "expected an array");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string where = "rows[" + std::to_string(i) + "]";
            const std::vector<double> r = number_array(
                rows[i], where, 6, "row must have 6 components [roll, pitch, yaw, x, y, z]");
            m.rows.emplace_back(r[0], r[1], r[2], r[3], r[4], r[5]);
        }
        const json& kinds = require_field(j, "kinds");
        if (!kinds.is_array()) parse_fail("kinds", "expected an array");
        for (std::size_t i = 0; i < kinds.size(); ++i) {
            m.kinds.push_back(kind_at(kinds[i], "kinds[" + std::to_string(i) + "]"));
        }
        return m;
    }
    case Representation::GJD: {
        GJDModel m;
        const json& frames = require_field(j, "frames");
        if (!frames.is_array()) parse_fail("frames", "expected an array");
        for (std::size_t i = 0; i < frames.size(); ++i) {
            const std::string where = "frames[" + std::to_string(i) + "]";
            m.joint_frames.push_back(
                transform_from(matrix_at(frames[i], where, diagnostics, tol)));
        }
        const json& kinds = require_field(j, "kinds");
        if (!kinds.is_array()) parse_fail("kinds", "expected an array");
        for (std::size_t i = 0; i < kinds.size(); ++i) {
            m.kinds.push_back(kind_at(kinds[i], "kinds[" + std::to_string(i) + "]"));
        }
        m.tool_frame =
            transform_from(matrix_at(require_field(j, "tool"), "tool", diagnostics, tol));
        return m;
    }
    }
    parse_fail("representation", "unknown representation");
}

json matrix_to_json(const Transform& t) {
    const Mat4 m = t.matrix();
    json out = json::array();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.push_back(m(r, c));
    return out;
}

} // namespace

ModelDocument parse_model(const std::string& text, std::vector<Diagnostic>& diagnostics,
                          double tol) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!j.is_object()) parse_fail("", "document must be a JSON object");

    const json& rep_field = require_field(j, "representation");
    if (!rep_field.is_string()) parse_fail("representation", "expected a string");
    const auto rep = representation_from_string(rep_field.get<std::string>());
    if (!rep) {
        parse_fail("representation",
                   "unknown representation \"" + rep_field.get<std::string>() +
                       "\" (expected dh, poe, rpyxyz or gjd)");
    }

    ModelDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) parse_fail("name", "expected a string");
        doc.name = j["name"].get<std::string>();
    }
    doc.model = parse_payload(j, *rep, diagnostics, tol);

    for (const Diagnostic& d : validate(doc.model, tol)) diagnostics.push_back(d);
    return doc;
}

ModelDocument parse_model(const std::string& text, double tol) {
    std::vector<Diagnostic> diagnostics;
    ModelDocument doc = parse_model(text, diagnostics, tol);
    if (!diagnostics.empty()) {
        std::ostringstream os;
        os << "invalid model:";
        for (const Diagnostic& d : diagnostics) {
            os << " [" << d.location << "] " << d.message << ";";
        }
        throw ValidationError(os.str());
    }
    return doc;
}

std::string serialize_model(const ModelDocument& doc) {
    require_valid(doc.model);
    json j;
    j["representation"] = to_string(doc.representation());
    j["name"] = doc.name;

    if (const auto* dh = std::get_if<DHModel>(&doc.model)) {
        j["base"] = {dh->base_row.a, dh->base_row.d, dh->base_row.alpha,
                     dh->base_row.theta};
        json rows = json::array();
        for (const DHRow& r : dh->rows) {
            rows.push_back(json::array({r.a, r.d, r.alpha, r.theta, to_string(r.kind)}));
        }
        j["rows"] = std::move(rows);
        if (!dh->tool.is_approx(Transform(), 0.0)) {
            j["tool"] = matrix_to_json(dh->tool);
        }
    } else if (const auto* poe = std::get_if<PoEModel>(&doc.model)) {
        j["m"] = matrix_to_json(poe->m);
        json screws = json::array();
        for (const Screw& s : poe->screws) {
            screws.push_back(json::array({s.omega.x(), s.omega.y(), s.omega.z(),
                                          s.v.x(), s.v.y(), s.v.z()}));
        }
        j["screws"] = std::move(screws);
    } else if (const auto* rpy = std::get_if<RpyXyzModel>(&doc.model)) {
        json rows = json::array();
        for (const RpyXyzRow& r : rpy->rows) {
            rows.push_back(json::array({r.roll, r.pitch, r.yaw, r.x, r.y, r.z}));
        }
        j["rows"] = std::move(rows);
        json kinds = json::array();
        for (JointKind k : rpy->kinds) kinds.push_back(to_string(k));
        j["kinds"] = std::move(kinds);
    } else {
        const GJDModel& g = std::get<GJDModel>(doc.model);
        json frames = json::array();
        for (const Transform& f : g.joint_frames) frames.push_back(matrix_to_json(f));
        j["frames"] = std::move(frames);
        json kinds = json::array();
        for (JointKind k : g.kinds) kinds.push_back(to_string(k));
        j["kinds"] = std::move(kinds);
        j["tool"] = matrix_to_json(g.tool_frame);
    }
    return j.dump(2) + "\n";
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IoError("failed reading " + path.string());
    return os.str();
}

} // namespace

ModelDocument load_model(const std::filesystem::path& path, double tol) {
    return parse_model(read_file(path), tol);
}

ModelDocument load_model(const std::filesystem::path& path,
                         std::vector<Diagnostic>& diagnostics, double tol) {
    return parse_model(read_file(path), diagnostics, tol);
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << text;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("failed moving output into place at " + path.string());
    }
}

void save_model(const ModelDocument& doc, const std::filesystem::path& path) {
    write_text_file(serialize_model(doc), path);
}

} // namespace kinconv
