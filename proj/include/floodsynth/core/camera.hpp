// Pinhole camera model. Camera space: x right, y down, z forward.
// Image origin top-left, pixel centers at integer + 0.5.
#pragma once

#include <cmath>

#include "floodsynth/core/math.hpp"

namespace floodsynth {

inline constexpr double kDefaultNearClip = 0.01;  // meters

struct CameraModel {
    double fx = 0.0;
    double fy = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    int width = 0;
    int height = 0;
    RigidTransform extrinsics;  // world -> camera
    double near_clip = kDefaultNearClip;

    Vec3 world_position() const {
        // R * pos + t = 0  =>  pos = -R^T t
        return -(extrinsics.rotation.transposed() * extrinsics.translation);
    }
};

inline Vec3 world_to_camera(const CameraModel& cam, const Vec3& p_world) {
    return cam.extrinsics.apply(p_world);
}

struct ProjectedPoint {
    double u = 0.0;
    double v = 0.0;
    bool valid = false;
};

inline ProjectedPoint project_point(const CameraModel& cam, const Vec3& p_cam) {
    ProjectedPoint out;
    if (p_cam.z <= cam.near_clip) return out;  // behind or on the near plane
    out.u = cam.fx * p_cam.x / p_cam.z + cam.cx;
    out.v = cam.fy * p_cam.y / p_cam.z + cam.cy;
    out.valid = out.u >= 0.0 && out.u < static_cast<double>(cam.width) &&
                out.v >= 0.0 && out.v < static_cast<double>(cam.height);
    return out;
}

// World->camera extrinsics for a camera at `eye` looking at `focus`.
// Degenerates if the view direction is parallel to world z; callers keep
// pitch away from straight down.
inline RigidTransform look_at_extrinsics(const Vec3& eye, const Vec3& focus) {
    const Vec3 forward = normalized(focus - eye);
    Vec3 right = cross(forward, Vec3{0.0, 0.0, 1.0});
    const double rn = norm(right);
    right = rn > 1e-12 ? right / rn : Vec3{1.0, 0.0, 0.0};
    const Vec3 down = cross(forward, right);

    Mat3 r;
    r.m = {{{right.x, right.y, right.z},
            {down.x, down.y, down.z},
            {forward.x, forward.y, forward.z}}};
    return {r, -(r * eye)};
}

// Symmetric intrinsics from a horizontal field of view.
inline CameraModel make_camera(int width, int height, double fov_x_deg) {
    CameraModel cam;
    cam.width = width;
    cam.height = height;
    cam.fx = 0.5 * width / std::tan(0.5 * deg_to_rad(fov_x_deg));
    cam.fy = cam.fx;
    cam.cx = 0.5 * width;
    cam.cy = 0.5 * height;
    return cam;
}

inline CameraModel make_camera(int width, int height, double fov_x_deg, const Vec3& eye,
                               const Vec3& focus) {
    CameraModel cam = make_camera(width, height, fov_x_deg);
    cam.extrinsics = look_at_extrinsics(eye, focus);
    return cam;
}

}  // namespace floodsynth
