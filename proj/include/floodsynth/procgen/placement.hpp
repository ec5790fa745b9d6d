// Domain randomization: car placement in spawn zones with rejection sampling
// for collision-free footprints, and per-frame randomization of camera pose,
// light, and water level. Sampling order is fixed; every consumer documents
// what it draws so frames stay reproducible.
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "floodsynth/core/camera.hpp"
#include "floodsynth/core/scene.hpp"
#include "floodsynth/flood/levels.hpp"
#include "floodsynth/procgen/assets.hpp"
#include "floodsynth/procgen/layout.hpp"
#include "floodsynth/procgen/rng.hpp"

namespace floodsynth {

// All angles in degrees, heights/jitters in meters.
struct RandomizationRanges {
    Interval camera_height{6.0, 14.0};
    Interval camera_pitch{20.0, 55.0};   // below horizontal; keep > 0 and < 90
    Interval camera_yaw{0.0, 360.0};
    Interval light_intensity{0.8, 1.2};
    Interval light_azimuth{0.0, 360.0};
    Interval object_yaw{0.0, 360.0};
    Interval object_jitter_xy{-0.5, 0.5};
    Interval water_level_jitter{-0.05, 0.05};

    bool valid() const {
        return camera_height.valid() && camera_pitch.valid() && camera_yaw.valid() &&
               light_intensity.valid() && light_azimuth.valid() && object_yaw.valid() &&
               object_jitter_xy.valid() && water_level_jitter.valid();
    }
};

struct PlacementResult {
    std::vector<ObjectInstance> instances;
    bool saturated = false;
    std::string notice;  // set when fewer than requested could be placed
};

inline constexpr int kPlacementAttemptCap = 1000;

// Draws per accepted car: zone index, anchor x, anchor y, jitter x, jitter y,
// yaw, asset index. Cars rest on the ground (min z of the transformed AABB
// equals the layout ground height) and keep pairwise disjoint xy footprints.
inline PlacementResult place_objects(const UrbanLayout& layout, const AssetCatalog& catalog,
                                     const RandomizationRanges& ranges, int count,
                                     RngStream& stream, std::uint16_t first_instance_id = 1) {
    PlacementResult result;
    if (count <= 0) return result;
    const auto cars = catalog.car_indices();
    if (cars.empty()) throw std::invalid_argument("asset catalog has no car assets");
    if (layout.spawn_zones.empty()) {
        result.saturated = true;
        result.notice = "no spawn zones available";
        return result;
    }

    std::vector<Rect2> footprints;
    std::uint16_t next_id = first_instance_id;
    int rejections = 0;
    for (int placed = 0; placed < count;) {
        if (rejections >= kPlacementAttemptCap) {
            result.saturated = true;
            result.notice = "placement saturated after " + std::to_string(kPlacementAttemptCap) +
                            " consecutive rejections; placed " + std::to_string(placed) +
                            " of " + std::to_string(count);
            break;
        }

        const Rect2& zone = layout.spawn_zones[sample_index(stream, layout.spawn_zones.size())];
        const double ax = sample_uniform(stream, zone.x0, zone.x1);
        const double ay = sample_uniform(stream, zone.y0, zone.y1);
        const double jx = sample_uniform(stream, ranges.object_jitter_xy);
        const double jy = sample_uniform(stream, ranges.object_jitter_xy);
        const double yaw = deg_to_rad(sample_uniform(stream, ranges.object_yaw));
        const AssetEntry& asset = catalog.entries[cars[sample_index(stream, cars.size())]];

        ObjectInstance inst;
        inst.instance_id = next_id;
        inst.semantic_class = SemanticClass::car;
        inst.mesh = asset.mesh;
        inst.material = MaterialParams{.base_color = {0.6, 0.1, 0.1},
                                       .roughness = 0.4,
                                       .opacity = 1.0,
                                       .specular = 0.5};
        inst.pose.rotation = rotation_z(yaw);
        inst.pose.translation = {ax + jx, ay + jy, 0.0};

        Aabb world_box = transform_aabb(asset.mesh->object_aabb, inst.pose);
        inst.pose.translation.z = layout.ground_height - world_box.min.z;
        world_box.min.z += inst.pose.translation.z;
        world_box.max.z += inst.pose.translation.z;

        const Rect2 footprint{world_box.min.x, world_box.min.y, world_box.max.x, world_box.max.y};
        bool collides = false;
        for (const Rect2& other : footprints)
            if (footprint.overlaps(other)) {
                collides = true;
                break;
            }
        if (collides) {
            ++rejections;
            continue;
        }

        rejections = 0;
        footprints.push_back(footprint);
        result.instances.push_back(std::move(inst));
        ++next_id;
        ++placed;
    }
    return result;
}

namespace detail {

inline Vec3 scene_focus_point(const ComposedScene& s) {
    double sx = 0.0, sy = 0.0;
    int cars = 0;
    for (const auto& inst : s.instances)
        if (inst.semantic_class == SemanticClass::car) {
            sx += inst.pose.translation.x;
            sy += inst.pose.translation.y;
            ++cars;
        }
    if (cars > 0) return {sx / cars, sy / cars, s.ground_height};
    return {s.ground_rect.center_x(), s.ground_rect.center_y(), s.ground_height};
}

}  // namespace detail

// Returns a new scene with camera pose, light direction/intensity, and water
// level re-sampled; the template is untouched. Draw order: camera height,
// camera pitch, camera yaw, light azimuth, light intensity, water jitter
// (water jitter is drawn only when the template is flooded). The camera
// orbits the car centroid (layout center when no cars) and looks at it; the
// light keeps its template elevation and ambient.
inline ComposedScene randomize_scene(const ComposedScene& scene_template,
                                     const RandomizationRanges& ranges, RngStream& stream,
                                     const FloodLevelTable& table = {}) {
    ComposedScene out = scene_template;

    const double height = sample_uniform(stream, ranges.camera_height);
    const double pitch = deg_to_rad(sample_uniform(stream, ranges.camera_pitch));
    const double yaw = deg_to_rad(sample_uniform(stream, ranges.camera_yaw));
    const Vec3 focus = detail::scene_focus_point(out);
    const double horizontal = height / std::tan(std::max(pitch, 1e-3));
    const Vec3 eye{focus.x + horizontal * std::cos(yaw), focus.y + horizontal * std::sin(yaw),
                   out.ground_height + height};
    out.camera.extrinsics = look_at_extrinsics(eye, focus);

    if (!out.lights.empty()) {
        LightParams& light = out.lights.front();
        const double elevation = std::asin(std::clamp(light.direction.z, -1.0, 1.0));
        const double azimuth = deg_to_rad(sample_uniform(stream, ranges.light_azimuth));
        light.direction = {std::cos(elevation) * std::cos(azimuth),
                           std::cos(elevation) * std::sin(azimuth), std::sin(elevation)};
        light.direction = normalized(light.direction);
        light.intensity = sample_uniform(stream, ranges.light_intensity);
    }

    if (out.water) {
        const double jitter = sample_uniform(stream, ranges.water_level_jitter);
        out.water->base_level =
            level_to_water_height(out.water->level_class, table, jitter, out.ground_height)
                .base_level;
    }
    return out;
}

}  // namespace floodsynth
