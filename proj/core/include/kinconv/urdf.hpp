#pragma once

#include <string>

#include "kinconv/model.hpp"

namespace kinconv {

/// A generated URDF document.
struct UrdfDocument {
    std::string robot_name;
    std::string xml;
};

/**
 * @brief Emits a minimal URDF for an RPY-XYZ chain.
 *
 * Links are base_link, link_1..link_n and tool_link. Joint i carries the
 * origin of row i+1 (joint 1 additionally absorbs the base row, which
 * keeps the kinematics exact for every joint value), rotates or slides
 * about the child-frame z axis, and gets placeholder limits. A final
 * fixed joint carries the last row into tool_link. No inertial, visual
 * or collision elements are produced.
 */
UrdfDocument export_urdf(const RpyXyzModel& model, const std::string& name);

} // namespace kinconv
