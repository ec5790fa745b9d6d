// Brute-force ray-cast reference. One ray per pixel through the pixel
// center, Moller-Trumbore against every triangle in the draw list. The ray
// direction is left unnormalized with camera-space z = 1, so the ray
// parameter t is exactly the camera-space depth and comparable to the
// rasterizer's depth buffer. Ties on t resolve to the earliest triangle in
// draw-list order (lowest instance id, then lowest triangle index).
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "floodsynth/core/camera.hpp"
#include "floodsynth/render/drawlist.hpp"

namespace floodsynth {

struct HitRecord {
    bool hit = false;
    double t = std::numeric_limits<double>::infinity();  // camera-space depth
    Vec3 position{};                                     // world space
    Vec3 normal{0.0, 0.0, 1.0};                          // interpolated, unit
    std::uint16_t instance_id = 0;
    std::uint16_t part_index = 0;
    SemanticClass semantic = SemanticClass::other;
    std::uint32_t material_index = 0;
    std::size_t triangle_index = 0;
    bool is_water = false;
};

namespace detail {

// Intersects origin + t*dir with one triangle; fills t and barycentrics
// (u toward v1, v toward v2) on success.
inline bool moller_trumbore(const Vec3& origin, const Vec3& dir, const DrawTriangle& tri,
                            double& t, double& u, double& v) {
    const Vec3 e1 = tri.v[1] - tri.v[0];
    const Vec3 e2 = tri.v[2] - tri.v[0];
    const Vec3 pvec = cross(dir, e2);
    const double det = dot(e1, pvec);
    if (std::fabs(det) < 1e-14) return false;
    const double inv_det = 1.0 / det;
    const Vec3 tvec = origin - tri.v[0];
    u = dot(tvec, pvec) * inv_det;
    if (u < 0.0 || u > 1.0) return false;
    const Vec3 qvec = cross(tvec, e1);
    v = dot(dir, qvec) * inv_det;
    if (v < 0.0 || u + v > 1.0) return false;
    t = dot(e2, qvec) * inv_det;
    return true;
}

}  // namespace detail

// Casts the ray for pixel (x, y) of `camera` against `list`. Hits at or in
// front of the near clip plane are ignored.
inline HitRecord raycast_pixel(const DrawList& list, const CameraModel& camera, int x, int y) {
    const Vec3 dir_cam{(x + 0.5 - camera.cx) / camera.fx,
                       (y + 0.5 - camera.cy) / camera.fy, 1.0};
    const Mat3 r_t = camera.extrinsics.rotation.transposed();
    const Vec3 origin = camera.world_position();
    const Vec3 dir = r_t * dir_cam;

    HitRecord best;
    for (std::size_t i = 0; i < list.triangles.size(); ++i) {
        const DrawTriangle& tri = list.triangles[i];
        double t, u, v;
        if (!detail::moller_trumbore(origin, dir, tri, t, u, v)) continue;
        if (t <= camera.near_clip) continue;
        if (t < best.t) {
            best.hit = true;
            best.t = t;
            const double w = 1.0 - u - v;
            best.position = origin + dir * t;
            Vec3 n = tri.n[0] * w + tri.n[1] * u + tri.n[2] * v;
            const double len = norm(n);
            best.normal = len > 0.0 ? n * (1.0 / len) : Vec3{0.0, 0.0, 1.0};
            best.instance_id = tri.instance_id;
            best.part_index = tri.part_index;
            best.semantic = tri.semantic;
            best.material_index = tri.material_index;
            best.triangle_index = i;
            best.is_water = tri.is_water;
        }
    }
    return best;
}

// Full-image reference: row-major vector of hit records, one per pixel.
inline std::vector<HitRecord> raycast_reference(const ComposedScene& scene,
                                                const RenderOptions& options = {}) {
    const DrawList list = build_draw_list(scene, options);
    const CameraModel& cam = scene.camera;
    std::vector<HitRecord> hits(static_cast<std::size_t>(cam.width) * cam.height);
    for (int y = 0; y < cam.height; ++y)
        for (int x = 0; x < cam.width; ++x)
            hits[static_cast<std::size_t>(y) * cam.width + x] = raycast_pixel(list, cam, x, y);
    return hits;
}

}  // namespace floodsynth
