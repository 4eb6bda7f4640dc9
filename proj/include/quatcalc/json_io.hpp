#pragma once

/// JSON forms used on the wire: a quaternion is a 4-element array
/// [q0, q1, q2, q3] with the scalar first, a path is an object with a
/// waypoint list and a per-leg segment count.

#include <string>

#include <json.hpp>

#include "quatcalc/errors.hpp"
#include "quatcalc/integral.hpp"
#include "quatcalc/quaternion.hpp"

namespace quatcalc {

inline nlohmann::json quaternion_to_json(const Quaternion& q) {
    return nlohmann::json::array({q.w, q.x, q.y, q.z});
}

inline Quaternion quaternion_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw parse_error("quaternion: expected a 4-element array [q0, q1, q2, q3]");
    for (const auto& v : j)
        if (!v.is_number())
            throw parse_error("quaternion: components must be numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

inline nlohmann::json path_to_json(const Path& path) {
    nlohmann::json waypoints = nlohmann::json::array();
    for (const Quaternion& q : path.waypoints)
        waypoints.push_back(quaternion_to_json(q));
    return {{"waypoints", std::move(waypoints)}, {"segments_per_leg", path.segments_per_leg}};
}

inline Path path_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("waypoints") || !j.contains("segments_per_leg"))
        throw parse_error("path: expected {\"waypoints\": [...], \"segments_per_leg\": N}");
    const nlohmann::json& w = j["waypoints"];
    if (!w.is_array())
        throw parse_error("path: waypoints must be an array of quaternions");
    Path path;
    for (const auto& entry : w)
        path.waypoints.push_back(quaternion_from_json(entry));
    if (!j["segments_per_leg"].is_number_integer())
        throw parse_error("path: segments_per_leg must be an integer");
    path.segments_per_leg = j["segments_per_leg"].get<int>();
    try {
        path.validate();
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("path: ") + e.what());
    }
    return path;
}

inline Path parse_path(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("path: ") + e.what());
    }
    return path_from_json(j);
}

} // namespace quatcalc
