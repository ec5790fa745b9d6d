// Fully resolved scene description: object instances, lights, camera, water
// surface, background. Immutable after composition; rendering and annotation
// read it concurrently without coordination.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "floodsynth/core/camera.hpp"
#include "floodsynth/core/material.hpp"
#include "floodsynth/core/math.hpp"
#include "floodsynth/core/mesh.hpp"
#include "floodsynth/flood/waves.hpp"

namespace floodsynth {

// Semantic codes as written into the semantic ID buffer. Instances may carry
// car/building/other; flood is reserved for the water pseudo-instance and
// ground for the ground plane fill.
enum class SemanticClass : std::uint16_t {
    other = 0,
    car = 1,
    flood = 2,
    building = 3,
    ground = 4,
};

inline const char* semantic_class_name(SemanticClass c) {
    switch (c) {
        case SemanticClass::other: return "other";
        case SemanticClass::car: return "car";
        case SemanticClass::flood: return "flood";
        case SemanticClass::building: return "building";
        case SemanticClass::ground: return "ground";
    }
    return "other";
}

// ID buffers are 16-bit with fine-grained = instance * 256 + part, which caps
// instances at 255. Id 255 is the water pseudo-instance.
inline constexpr std::uint16_t kWaterInstanceId = 255;
inline constexpr std::uint16_t kMaxRegularInstanceId = 254;

struct LightParams {
    Vec3 direction{0.0, 0.0, 1.0};  // unit, surface -> light
    double intensity = 1.0;         // >= 0
    double ambient = 0.2;           // [0,1]
};

struct ObjectInstance {
    std::uint16_t instance_id = 0;  // 1..254, unique within a scene
    SemanticClass semantic_class = SemanticClass::other;
    std::shared_ptr<const TriangleMesh> mesh;
    RigidTransform pose;  // object -> world
    MaterialParams material;
};

struct BackgroundSpec {
    Rgb color{0.55, 0.65, 0.8};
    std::optional<std::string> image;  // stretched to the frame when set
};

struct ComposedScene {
    std::vector<ObjectInstance> instances;
    double ground_height = 0.0;      // world z of the ground plane
    Rect2 ground_rect;               // xy extent of the ground/water patch
    MaterialParams ground_material{.base_color = {0.35, 0.35, 0.36},
                                   .roughness = 0.9,
                                   .opacity = 1.0,
                                   .specular = 0.02};
    std::vector<LightParams> lights;
    CameraModel camera;
    std::optional<WaterSurfaceParams> water;  // absent = non-flooded (level 0)
    BackgroundSpec background;
    double time = 0.0;  // seconds, drives wave animation
};

inline std::vector<std::string> validate_scene(const ComposedScene& s) {
    std::vector<std::string> v;

    std::vector<std::uint16_t> seen;
    for (const auto& inst : s.instances) {
        const std::string tag = "instance " + std::to_string(inst.instance_id);
        if (inst.instance_id == 0)
            v.push_back(tag + ": instance_id must be positive");
        if (inst.instance_id > kMaxRegularInstanceId)
            v.push_back(tag + ": instance_id above " + std::to_string(kMaxRegularInstanceId) +
                        " (255 is reserved for water)");
        for (std::uint16_t id : seen)
            if (id == inst.instance_id) {
                v.push_back("duplicate instance_id " + std::to_string(inst.instance_id));
                break;
            }
        seen.push_back(inst.instance_id);

        if (inst.semantic_class == SemanticClass::flood)
            v.push_back(tag + ": flood class is reserved for the water surface");
        if (inst.semantic_class == SemanticClass::ground)
            v.push_back(tag + ": ground class is never an instance");
        if (!inst.mesh) {
            v.push_back(tag + ": missing mesh");
        } else {
            for (auto& msg : validate_mesh(*inst.mesh, tag)) v.push_back(std::move(msg));
        }
        if (!is_rotation(inst.pose.rotation))
            v.push_back(tag + ": pose rotation is not orthonormal");

        const MaterialParams& m = inst.material;
        for (double c : m.base_color)
            if (c < 0.0 || c > 1.0) {
                v.push_back(tag + ": material base_color outside [0,1]");
                break;
            }
        if (m.roughness < 0.0 || m.roughness > 1.0 || m.opacity < 0.0 || m.opacity > 1.0 ||
            m.specular < 0.0 || m.specular > 1.0)
            v.push_back(tag + ": material scalar outside [0,1]");
    }

    for (std::size_t i = 0; i < s.lights.size(); ++i) {
        const LightParams& l = s.lights[i];
        const std::string tag = "light " + std::to_string(i);
        if (std::abs(norm(l.direction) - 1.0) > 1e-9)
            v.push_back(tag + ": direction is not unit length");
        if (l.intensity < 0.0) v.push_back(tag + ": negative intensity");
        if (l.ambient < 0.0 || l.ambient > 1.0) v.push_back(tag + ": ambient outside [0,1]");
    }

    const CameraModel& c = s.camera;
    if (c.fx <= 0.0 || c.fy <= 0.0) v.push_back("camera: fx and fy must be positive");
    if (c.width < 1 || c.height < 1) v.push_back("camera: resolution must be at least 1x1");
    if (c.cx < 0.0 || c.cx >= static_cast<double>(c.width) || c.cy < 0.0 ||
        c.cy >= static_cast<double>(c.height))
        v.push_back("camera: principal point outside the image");
    if (!is_rotation(c.extrinsics.rotation))
        v.push_back("camera: extrinsics rotation is not orthonormal");

    if (s.water) {
        const WaterSurfaceParams& w = *s.water;
        if (w.waves.empty()) v.push_back("water: flooded scene needs at least one wave");
        if (w.level_class < 1 || w.level_class > 4)
            v.push_back("water: level_class outside 1..4");
        if (w.foam_threshold <= 0.0 || w.foam_threshold > 1.0)
            v.push_back("water: foam_threshold outside (0,1]");
        if (w.gravity <= 0.0) v.push_back("water: gravity must be positive");
        if (w.roughness_noise_amp < 0.0) v.push_back("water: negative roughness_noise_amp");
        for (std::size_t i = 0; i < w.waves.size(); ++i) {
            const WaveComponent& wc = w.waves[i];
            if (wc.amplitude < 0.0)
                v.push_back("water: wave " + std::to_string(i) + " has negative amplitude");
            if (wc.kx * wc.kx + wc.ky * wc.ky <= 0.0)
                v.push_back("water: wave " + std::to_string(i) + " has zero wave vector");
        }
    }

    // An empty ground_rect simply draws no ground (renders as background), but
    // a flooded scene needs the rect because the water patch spans it.
    if (s.water && !s.ground_rect.valid())
        v.push_back("scene: water present but ground_rect is empty");
    return v;
}

}  // namespace floodsynth
