// Text-format emitters and the matching parsers used for round-trip checks
// and dataset validation. YOLO coordinates use the pixel-center convention
// (cx = ((x0+x1)/2 + 0.5)/W) with inclusive integer bounds, six decimals, LF
// endings. Camera JSON carries intrinsics plus the row-major [R|t] and the
// derived world position. Point clouds go to ASCII PLY.
#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "floodsynth/annotate/bbox.hpp"
#include "floodsynth/core/camera.hpp"

namespace floodsynth {

namespace detail {

inline std::string format_fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace detail

// ---- YOLO labels -------------------------------------------------------------

struct YoloLabel {
    int class_id = 0;
    double cx = 0.0, cy = 0.0, w = 0.0, h = 0.0;  // normalized to (0,1]

    // Inverts the pixel-center convention; exact up to the 6-decimal quantization.
    BBox2D to_pixels(int width, int height) const {
        const double center_x = cx * width - 0.5;
        const double center_y = cy * height - 0.5;
        const double half_w = (w * width - 1.0) / 2.0;
        const double half_h = (h * height - 1.0) / 2.0;
        BBox2D box;
        box.x0 = static_cast<int>(std::lround(center_x - half_w));
        box.x1 = static_cast<int>(std::lround(center_x + half_w));
        box.y0 = static_cast<int>(std::lround(center_y - half_h));
        box.y1 = static_cast<int>(std::lround(center_y + half_h));
        box.class_id = class_id;
        return box;
    }
};

inline std::string yolo_line(const BBox2D& box, int width, int height) {
    std::string line = std::to_string(box.class_id);
    line += " " + detail::format_fixed6(((box.x0 + box.x1) / 2.0 + 0.5) / width);
    line += " " + detail::format_fixed6(((box.y0 + box.y1) / 2.0 + 0.5) / height);
    line += " " + detail::format_fixed6(static_cast<double>(box.x1 - box.x0 + 1) / width);
    line += " " + detail::format_fixed6(static_cast<double>(box.y1 - box.y0 + 1) / height);
    return line;
}

// Strict grammar: five whitespace-separated fields per line, integer class,
// all four coordinates finite and inside (0,1].
inline std::vector<YoloLabel> parse_yolo(const std::string& text) {
    std::vector<YoloLabel> labels;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        YoloLabel l;
        std::string extra;
        if (!(fields >> l.class_id >> l.cx >> l.cy >> l.w >> l.h) || (fields >> extra))
            throw std::runtime_error("yolo: malformed line " + std::to_string(line_no));
        if (l.class_id < 0)
            throw std::runtime_error("yolo: negative class on line " + std::to_string(line_no));
        for (double v : {l.cx, l.cy, l.w, l.h})
            if (!std::isfinite(v) || v <= 0.0 || v > 1.0)
                throw std::runtime_error("yolo: coordinate outside (0,1] on line " +
                                         std::to_string(line_no));
        labels.push_back(l);
    }
    return labels;
}

// ---- camera JSON ---------------------------------------------------------------

inline std::string export_camera(const CameraModel& cam) {
    nlohmann::json j;
    j["fx"] = cam.fx;
    j["fy"] = cam.fy;
    j["cx"] = cam.cx;
    j["cy"] = cam.cy;
    j["width"] = cam.width;
    j["height"] = cam.height;
    nlohmann::json rt = nlohmann::json::array();
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) rt.push_back(cam.extrinsics.rotation(r, c));
        rt.push_back(r == 0 ? cam.extrinsics.translation.x
                            : r == 1 ? cam.extrinsics.translation.y
                                     : cam.extrinsics.translation.z);
    }
    j["extrinsics"] = rt;
    const Vec3 pos = cam.world_position();
    j["position"] = {pos.x, pos.y, pos.z};
    return j.dump(2) + "\n";
}

inline CameraModel parse_camera_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    CameraModel cam;
    cam.fx = j.at("fx").get<double>();
    cam.fy = j.at("fy").get<double>();
    cam.cx = j.at("cx").get<double>();
    cam.cy = j.at("cy").get<double>();
    cam.width = j.at("width").get<int>();
    cam.height = j.at("height").get<int>();
    const auto& rt = j.at("extrinsics");
    if (rt.size() != 12) throw std::runtime_error("camera json: extrinsics needs 12 numbers");
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c)
            cam.extrinsics.rotation(r, c) = rt[static_cast<std::size_t>(r) * 4 + c].get<double>();
        const double t = rt[static_cast<std::size_t>(r) * 4 + 3].get<double>();
        (r == 0 ? cam.extrinsics.translation.x
                : r == 1 ? cam.extrinsics.translation.y
                         : cam.extrinsics.translation.z) = t;
    }
    return cam;
}

// ---- point cloud PLY -----------------------------------------------------------

inline std::string export_pointcloud_ply(const std::vector<Vec3>& points) {
    std::string out = "ply\nformat ascii 1.0\nelement vertex " + std::to_string(points.size()) +
                      "\nproperty float x\nproperty float y\nproperty float z\nend_header\n";
    for (const Vec3& p : points)
        out += detail::format_fixed6(p.x) + " " + detail::format_fixed6(p.y) + " " +
               detail::format_fixed6(p.z) + "\n";
    return out;
}

inline std::vector<Vec3> parse_ply(const std::string& text) {
    std::istringstream input(text);
    std::string line;
    std::size_t count = 0;
    bool saw_header_end = false;
    if (!std::getline(input, line) || (line != "ply" && line != "ply\r"))
        throw std::runtime_error("ply: bad magic");
    while (std::getline(input, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("element vertex ", 0) == 0) count = std::stoul(line.substr(15));
        if (line == "end_header") {
            saw_header_end = true;
            break;
        }
    }
    if (!saw_header_end) throw std::runtime_error("ply: missing end_header");
    std::vector<Vec3> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Vec3 p;
        if (!(input >> p.x >> p.y >> p.z))
            throw std::runtime_error("ply: truncated vertex list");
        points.push_back(p);
    }
    return points;
}

}  // namespace floodsynth
