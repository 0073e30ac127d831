#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "kinconv/model.hpp"

namespace kinconv {

/**
 * @brief A named model as stored on disk.
 *
 * Documents are JSON objects with a `representation` tag (dh, poe,
 * rpyxyz or gjd), a `name`, and the representation-specific payload.
 * Angles are radians, lengths meters. Matrices are 16 row-major numbers.
 *
 *   dh:     base [a,d,alpha,theta], rows [[a,d,alpha,theta,kind]...],
 *           optional tool matrix
 *   poe:    m matrix, screws [[wx,wy,wz,vx,vy,vz]...]
 *   rpyxyz: rows [[roll,pitch,yaw,x,y,z]...], kinds [kind...]
 *   gjd:    frames [matrix...], kinds [kind...], tool matrix
 */
struct ModelDocument {
    std::string name;
    AnyModel model;

    Representation representation() const { return representation_of(model); }
};

/// Parses and validates a document. Structural problems throw ParseError;
/// invariant violations throw ValidationError.
ModelDocument parse_model(const std::string& text, double tol = kDefaultTol);

/// Lenient variant: structural problems still throw ParseError, but
/// invariant violations are returned as diagnostics instead of thrown.
ModelDocument parse_model(const std::string& text, std::vector<Diagnostic>& diagnostics,
                          double tol = kDefaultTol);

/// Serializes a validated document; the output is deterministic and
/// numbers round-trip exactly.
std::string serialize_model(const ModelDocument& doc);

/// Reads and parses a document file.
ModelDocument load_model(const std::filesystem::path& path, double tol = kDefaultTol);

/// Lenient load used by validation tooling.
ModelDocument load_model(const std::filesystem::path& path,
                         std::vector<Diagnostic>& diagnostics, double tol = kDefaultTol);

/// Writes a document, replacing `path` only after the full serialization
/// succeeded so failures never leave partial files.
void save_model(const ModelDocument& doc, const std::filesystem::path& path);

/// Writes arbitrary text with the same no-partial-output guarantee.
void write_text_file(const std::string& text, const std::filesystem::path& path);

} // namespace kinconv
