// 2D boxes come straight from the instance ID buffer (tight, inclusive pixel
// bounds), 3D boxes from the object-space AABB pushed through the pose. Both
// are therefore exact by construction rather than hand-annotated.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "floodsynth/core/camera.hpp"
#include "floodsynth/core/scene.hpp"
#include "floodsynth/render/framebuffers.hpp"

namespace floodsynth {

struct BBox2D {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // inclusive pixel bounds
    int class_id = 0;
    int instance_id = 0;

    int pixel_width() const { return x1 - x0 + 1; }
    int pixel_height() const { return y1 - y0 + 1; }
};

struct BBox3D {
    std::array<Vec3, 8> corners_world{};
    std::array<Vec3, 8> corners_camera{};
    Vec3 center{};   // world frame
    Vec3 extents{};  // full side lengths of the object-space AABB
    double yaw = 0.0;  // rotation about world z, radians
    int instance_id = 0;
};

inline std::optional<BBox2D> bbox2d_from_instance_mask(const std::vector<std::uint16_t>& mask,
                                                       int width, int height, std::uint16_t id,
                                                       int min_pixels) {
    int x0 = width, y0 = height, x1 = -1, y1 = -1;
    long count = 0;
    for (int y = 0; y < height; ++y) {
        const std::uint16_t* row = mask.data() + static_cast<std::size_t>(y) * width;
        for (int x = 0; x < width; ++x) {
            if (row[x] != id) continue;
            ++count;
            if (x < x0) x0 = x;
            if (x > x1) x1 = x;
            if (y < y0) y0 = y;
            if (y > y1) y1 = y;
        }
    }
    if (count < min_pixels || count == 0) return std::nullopt;
    BBox2D box;
    box.x0 = x0;
    box.y0 = y0;
    box.x1 = x1;
    box.y1 = y1;
    box.instance_id = id;
    return box;
}

inline std::optional<BBox2D> bbox2d_from_instance_mask(const FrameBuffers& fb, std::uint16_t id,
                                                       int min_pixels) {
    return bbox2d_from_instance_mask(fb.instance, fb.width, fb.height, id, min_pixels);
}

inline BBox3D bbox3d_of_instance(const ObjectInstance& inst, const CameraModel& cam) {
    BBox3D box;
    const Aabb& local = inst.mesh->object_aabb;
    const auto corners = local.corners();
    for (std::size_t i = 0; i < 8; ++i) {
        box.corners_world[i] = inst.pose.apply(corners[i]);
        box.corners_camera[i] = world_to_camera(cam, box.corners_world[i]);
    }
    box.center = inst.pose.apply(local.center());
    box.extents = local.extents();
    const Mat3& r = inst.pose.rotation;
    box.yaw = std::atan2(r(1, 0), r(0, 0));
    box.instance_id = inst.instance_id;
    return box;
}

}  // namespace floodsynth
