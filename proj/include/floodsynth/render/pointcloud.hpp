// Depth buffer back-projection. Every pixel with depth > 0 becomes one
// camera-frame point through the pinhole model at the pixel center, scanned
// row-major so the cloud order is reproducible.
#pragma once

#include <vector>

#include "floodsynth/core/camera.hpp"
#include "floodsynth/render/framebuffers.hpp"

namespace floodsynth {

inline std::vector<Vec3> depth_to_pointcloud(const FrameBuffers& fb, const CameraModel& cam) {
    std::vector<Vec3> points;
    for (int y = 0; y < fb.height; ++y) {
        for (int x = 0; x < fb.width; ++x) {
            const double z = fb.depth[fb.index(x, y)];
            if (z <= 0.0) continue;
            points.push_back({(x + 0.5 - cam.cx) / cam.fx * z,
                              (y + 0.5 - cam.cy) / cam.fy * z, z});
        }
    }
    return points;
}

}  // namespace floodsynth
