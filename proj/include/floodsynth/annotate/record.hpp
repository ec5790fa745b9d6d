// Per-frame label record: one entry per car instance with flood level,
// submersion ratio, pixel count and both bounding boxes, plus the camera
// pose. Built from the rendered buffers so labels and pixels can never
// disagree. encode_buffers turns the G-buffer channels into their on-disk
// blobs, keyed by file suffix.
#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "floodsynth/annotate/bbox.hpp"
#include "floodsynth/annotate/exporters.hpp"
#include "floodsynth/annotate/image_io.hpp"
#include "floodsynth/core/scene.hpp"
#include "floodsynth/flood/levels.hpp"
#include "floodsynth/render/framebuffers.hpp"

namespace floodsynth {

inline constexpr int kDefaultMinPixels = 25;

struct InstanceLabel {
    std::uint16_t instance_id = 0;
    SemanticClass semantic_class = SemanticClass::car;
    int flood_level = 0;         // 0..4
    double submersion_ratio = 0.0;
    long pixel_count = 0;
    std::optional<BBox2D> bbox2d;  // absent iff pixel_count < min_pixels
    BBox3D bbox3d;
};

struct AnnotationRecord {
    std::uint64_t frame_id = 0;
    std::uint64_t seed = 0;
    int scene_flood_level = 0;  // 0..4
    CameraModel camera;
    std::vector<InstanceLabel> entries;
};

inline AnnotationRecord build_annotation_record(const ComposedScene& s, const FrameBuffers& fb,
                                                int min_pixels,
                                                const FloodLevelTable& table = {},
                                                std::uint64_t frame_id = 0,
                                                std::uint64_t seed = 0) {
    // The buffers must describe exactly this scene: every non-background id
    // has to be a scene instance (or the water surface).
    std::vector<long> counts(65536, 0);
    for (std::uint16_t id : fb.instance) ++counts[id];
    std::vector<bool> known(65536, false);
    known[0] = true;
    if (s.water) known[kWaterInstanceId] = true;
    for (const auto& inst : s.instances) known[inst.instance_id] = true;
    for (int id = 0; id < 65536; ++id)
        if (counts[id] > 0 && !known[id])
            throw std::runtime_error("annotation: instance buffer contains unknown id " +
                                     std::to_string(id));

    AnnotationRecord rec;
    rec.frame_id = frame_id;
    rec.seed = seed;
    rec.scene_flood_level = s.water ? s.water->level_class : 0;
    rec.camera = s.camera;

    std::vector<const ObjectInstance*> cars;
    for (const auto& inst : s.instances)
        if (inst.semantic_class == SemanticClass::car) cars.push_back(&inst);
    std::sort(cars.begin(), cars.end(), [](const ObjectInstance* a, const ObjectInstance* b) {
        return a->instance_id < b->instance_id;
    });

    for (const ObjectInstance* car : cars) {
        InstanceLabel label;
        label.instance_id = car->instance_id;
        label.semantic_class = SemanticClass::car;
        const Aabb world_box = transform_aabb(car->mesh->object_aabb, car->pose);
        label.submersion_ratio =
            s.water ? submersion_ratio(world_box, s.water->base_level) : 0.0;
        label.flood_level = flood_level_label(s.water.has_value(), label.submersion_ratio, table);
        label.pixel_count = counts[car->instance_id];
        label.bbox2d = bbox2d_from_instance_mask(fb, car->instance_id, min_pixels);
        if (label.bbox2d) {
            label.bbox2d->class_id = label.flood_level;
            label.bbox2d->instance_id = car->instance_id;
        }
        label.bbox3d = bbox3d_of_instance(*car, s.camera);
        rec.entries.push_back(std::move(label));
    }
    return rec;
}

// One line per visible (boxed) entry; YOLO class id = flood level.
inline std::string export_yolo(const AnnotationRecord& rec, int width, int height) {
    std::string out;
    for (const InstanceLabel& e : rec.entries) {
        if (!e.bbox2d) continue;
        BBox2D box = *e.bbox2d;
        box.class_id = e.flood_level;
        out += yolo_line(box, width, height) + "\n";
    }
    return out;
}

// G-buffer channels to file blobs, keyed by filename suffix.
inline std::map<std::string, Blob> encode_buffers(const FrameBuffers& fb) {
    std::map<std::string, Blob> blobs;
    auto guard = [](const char* channel, auto&& fn) -> Blob {
        try {
            return fn();
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("encode ") + channel + ": " + e.what());
        }
    };
    blobs[".png"] = guard("color", [&] {
        return encode_png_rgb8(ImageRgb8{fb.width, fb.height, fb.color});
    });
    blobs[".depth.pfm"] = guard("depth", [&] {
        return encode_pfm_gray(fb.depth, fb.width, fb.height);
    });
    blobs[".normal.pfm"] = guard("normal", [&] {
        return encode_pfm_rgb(fb.normal, fb.width, fb.height);
    });
    blobs[".inst.pgm"] = guard("instance", [&] {
        return encode_pgm16(fb.instance, fb.width, fb.height);
    });
    blobs[".sem.pgm"] = guard("semantic", [&] {
        return encode_pgm16(fb.semantic, fb.width, fb.height);
    });
    blobs[".fine.pgm"] = guard("fine_grained", [&] {
        return encode_pgm16(fb.fine_grained, fb.width, fb.height);
    });
    return blobs;
}

// ---- JSON forms (shared with the dataset manifest) ---------------------------

inline nlohmann::json instance_label_to_json(const InstanceLabel& e) {
    nlohmann::json j;
    j["instance_id"] = e.instance_id;
    j["semantic_class"] = semantic_class_name(e.semantic_class);
    j["flood_level"] = e.flood_level;
    j["submersion_ratio"] = e.submersion_ratio;
    j["pixel_count"] = e.pixel_count;
    if (e.bbox2d) {
        j["bbox2d"] = {{"x0", e.bbox2d->x0},
                       {"y0", e.bbox2d->y0},
                       {"x1", e.bbox2d->x1},
                       {"y1", e.bbox2d->y1},
                       {"class_id", e.bbox2d->class_id}};
    }
    nlohmann::json b3;
    b3["center"] = {e.bbox3d.center.x, e.bbox3d.center.y, e.bbox3d.center.z};
    b3["extents"] = {e.bbox3d.extents.x, e.bbox3d.extents.y, e.bbox3d.extents.z};
    b3["yaw"] = e.bbox3d.yaw;
    nlohmann::json corners = nlohmann::json::array();
    for (const Vec3& c : e.bbox3d.corners_world) {
        corners.push_back(c.x);
        corners.push_back(c.y);
        corners.push_back(c.z);
    }
    b3["corners_world"] = corners;
    j["bbox3d"] = b3;
    return j;
}

inline InstanceLabel instance_label_from_json(const nlohmann::json& j) {
    InstanceLabel e;
    e.instance_id = j.at("instance_id").get<std::uint16_t>();
    const std::string sem = j.at("semantic_class").get<std::string>();
    for (int code = 0; code <= 4; ++code)
        if (sem == semantic_class_name(static_cast<SemanticClass>(code)))
            e.semantic_class = static_cast<SemanticClass>(code);
    e.flood_level = j.at("flood_level").get<int>();
    e.submersion_ratio = j.at("submersion_ratio").get<double>();
    e.pixel_count = j.at("pixel_count").get<long>();
    if (j.contains("bbox2d")) {
        const auto& b = j.at("bbox2d");
        BBox2D box;
        box.x0 = b.at("x0").get<int>();
        box.y0 = b.at("y0").get<int>();
        box.x1 = b.at("x1").get<int>();
        box.y1 = b.at("y1").get<int>();
        box.class_id = b.at("class_id").get<int>();
        box.instance_id = e.instance_id;
        e.bbox2d = box;
    }
    const auto& b3 = j.at("bbox3d");
    e.bbox3d.center = {b3.at("center")[0], b3.at("center")[1], b3.at("center")[2]};
    e.bbox3d.extents = {b3.at("extents")[0], b3.at("extents")[1], b3.at("extents")[2]};
    e.bbox3d.yaw = b3.at("yaw").get<double>();
    const auto& corners = b3.at("corners_world");
    for (std::size_t i = 0; i < 8 && i * 3 + 2 < corners.size(); ++i)
        e.bbox3d.corners_world[i] = {corners[i * 3], corners[i * 3 + 1], corners[i * 3 + 2]};
    e.bbox3d.instance_id = e.instance_id;
    return e;
}

}  // namespace floodsynth
