#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kinconv/convert.hpp"
#include "kinconv/io.hpp"
#include "kinconv/kinematics.hpp"
#include "kinconv/urdf.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;     // parse / validation failure
constexpr int kExitConversion = 2;  // conversion infeasibility
constexpr int kExitIo = 3;          // file system failure

std::vector<double> parse_q(const std::string& list) {
    std::vector<double> out;
    if (list.empty()) return out;
    std::istringstream is(list);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw kinconv::ParseError("--q: \"" + item + "\" is not a number");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) {
            throw kinconv::ParseError("--q: \"" + item + "\" is not a number");
        }
        out.push_back(v);
    }
    return out;
}

void print_matrix(const kinconv::Transform& t) {
    const kinconv::Mat4 m = t.matrix();
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            std::printf(c == 0 ? "%.9g" : " %.9g", m(r, c));
        }
        std::printf("\n");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        kinconv::write_text_file(text, out_path);
    }
}

struct Options {
    std::string input;
    std::string to;
    std::string out;
    std::string name;
    std::string q;
    double tol = kinconv::kDefaultTol;
};

int run_convert(const Options& opt) {
    kinconv::ModelDocument doc = kinconv::load_model(opt.input, opt.tol);
    const std::string name = opt.name.empty() ? doc.name : opt.name;

    if (opt.to == "urdf") {
        const auto rpy = std::get<kinconv::RpyXyzModel>(
            kinconv::convert(doc.model, kinconv::Representation::RpyXyz, opt.tol));
        const kinconv::UrdfDocument urdf =
            kinconv::export_urdf(rpy, name.empty() ? "robot" : name);
        emit(urdf.xml, opt.out);
        return kExitOk;
    }

    const auto target = kinconv::representation_from_string(opt.to);
    if (!target) {
        throw kinconv::ParseError("--to must be one of dh, poe, rpyxyz, gjd, urdf");
    }
    kinconv::ModelDocument out_doc;
    out_doc.name = name;
    out_doc.model = kinconv::convert(doc.model, *target, opt.tol);
    emit(kinconv::serialize_model(out_doc), opt.out);
    return kExitOk;
}

int run_fk(const Options& opt) {
    const kinconv::ModelDocument doc = kinconv::load_model(opt.input, opt.tol);
    const std::vector<double> q = parse_q(opt.q);
    print_matrix(kinconv::fk(doc.model, q));
    return kExitOk;
}

int run_validate(const Options& opt) {
    std::vector<kinconv::Diagnostic> diagnostics;
    kinconv::load_model(opt.input, diagnostics, opt.tol);
    if (diagnostics.empty()) {
        std::cout << "ok\n";
        return kExitOk;
    }
    for (const auto& d : diagnostics) {
        std::cout << d.location << ": " << d.message << "\n";
    }
    return kExitInvalid;
}

int run_export_urdf(const Options& opt) {
    Options o = opt;
    o.to = "urdf";
    return run_convert(o);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kinconv - serial-manipulator kinematic model converter\n"
                 "Representations: standard DH tables, product-of-exponentials screws,\n"
                 "RPY-XYZ frame chains and global joint descriptions; URDF export."};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_out) {
        cmd->add_option("input", opt.input, "input model document (JSON)")->required();
        cmd->add_option("--tol", opt.tol, "validation tolerance")
            ->capture_default_str();
        if (with_out) {
            cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
        }
    };

    CLI::App* conv = app.add_subcommand("convert", "convert a model to another representation");
    add_common(conv, true);
    conv->add_option("--to", opt.to, "target representation: dh|poe|rpyxyz|gjd|urdf")
        ->required();
    conv->add_option("--name", opt.name, "output model name (defaults to the input name)");

    CLI::App* fk_cmd = app.add_subcommand("fk", "forward kinematics at a joint configuration");
    add_common(fk_cmd, false);
    fk_cmd->add_option("--q", opt.q, "comma-separated joint displacements from home")
        ->required();

    CLI::App* val = app.add_subcommand("validate", "check a model document against its invariants");
    add_common(val, false);

    CLI::App* urdf = app.add_subcommand("export-urdf", "write a URDF for the model");
    add_common(urdf, true);
    urdf->add_option("--name", opt.name, "robot name in the URDF");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (conv->parsed()) return run_convert(opt);
        if (fk_cmd->parsed()) return run_fk(opt);
        if (val->parsed()) return run_validate(opt);
        if (urdf->parsed()) return run_export_urdf(opt);
    } catch (const kinconv::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const kinconv::ConversionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConversion;
    } catch (const kinconv::GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConversion;
    } catch (const kinconv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
