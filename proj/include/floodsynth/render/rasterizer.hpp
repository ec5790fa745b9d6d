// Software rasterizer. Opaque geometry first (z-buffered, strict less-than
// test, draw order breaks exact depth ties), then the water layer into its
// own depth plane, then one composite per pixel over the nearest opaque
// surface or the background. Coverage is pixel-center with inclusive edges;
// attributes interpolate perspective-correct via 1/z. Single-threaded by
// construction so output bytes never depend on scheduling.
#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "floodsynth/core/camera.hpp"
#include "floodsynth/core/scene.hpp"
#include "floodsynth/flood/waves.hpp"
#include "floodsynth/render/drawlist.hpp"
#include "floodsynth/render/framebuffers.hpp"
#include "floodsynth/render/shading.hpp"

namespace floodsynth {

namespace detail {

// Triangle vertex after near clipping: camera-space position plus the world
// attributes that survive to shading. Lerping world position under a rigid
// camera transform is exact, so the clipped point stays on the surface.
struct ClipVertex {
    Vec3 cam;
    Vec3 world;
    Vec3 nrm;
};

inline ClipVertex lerp_clip_vertex(const ClipVertex& a, const ClipVertex& b, double s) {
    return {a.cam + (b.cam - a.cam) * s, a.world + (b.world - a.world) * s,
            a.nrm + (b.nrm - a.nrm) * s};
}

// Sutherland-Hodgman against the plane cam.z >= near. A triangle clips to a
// polygon of 0, 3 or 4 vertices.
inline int clip_near_plane(const ClipVertex in[3], double near_z, ClipVertex out[4]) {
    int count = 0;
    for (int i = 0; i < 3; ++i) {
        const ClipVertex& cur = in[i];
        const ClipVertex& nxt = in[(i + 1) % 3];
        const bool cur_in = cur.cam.z >= near_z;
        const bool nxt_in = nxt.cam.z >= near_z;
        if (cur_in) out[count++] = cur;
        if (cur_in != nxt_in) {
            const double s = (near_z - cur.cam.z) / (nxt.cam.z - cur.cam.z);
            out[count++] = lerp_clip_vertex(cur, nxt, s);
        }
    }
    return count;
}

inline double edge_function(double ax, double ay, double bx, double by, double px, double py) {
    return (bx - ax) * (py - ay) - (by - ay) * (px - ax);
}

// Scratch planes reused across both passes of one frame.
struct RasterTarget {
    int width = 0;
    int height = 0;
    std::vector<double> depth;      // +inf = no fragment yet
    std::vector<Vec3> world;        // world position of the winning fragment
    std::vector<Vec3> normal;       // interpolated unit normal
    std::vector<std::uint32_t> material;
    std::vector<std::uint16_t> instance;
    std::vector<std::uint16_t> part;
    std::vector<SemanticClass> semantic;

    RasterTarget(int w, int h)
        : width(w),
          height(h),
          depth(static_cast<std::size_t>(w) * h, std::numeric_limits<double>::infinity()),
          world(static_cast<std::size_t>(w) * h),
          normal(static_cast<std::size_t>(w) * h),
          material(static_cast<std::size_t>(w) * h, 0),
          instance(static_cast<std::size_t>(w) * h, 0),
          part(static_cast<std::size_t>(w) * h, 0),
          semantic(static_cast<std::size_t>(w) * h, SemanticClass::other) {}
};

// Rasterizes one clipped camera-space triangle into the target.
inline void raster_triangle(RasterTarget& target, const CameraModel& cam, const DrawTriangle& src,
                            const ClipVertex& a, const ClipVertex& b, const ClipVertex& c) {
    const ClipVertex* verts[3] = {&a, &b, &c};
    double u[3], v[3], z[3];
    for (int i = 0; i < 3; ++i) {
        z[i] = verts[i]->cam.z;
        u[i] = cam.fx * verts[i]->cam.x / z[i] + cam.cx;
        v[i] = cam.fy * verts[i]->cam.y / z[i] + cam.cy;
    }

    double area2 = edge_function(u[0], v[0], u[1], v[1], u[2], v[2]);
    if (area2 == 0.0) return;
    // Orient so that inside means all edge values >= 0 (two-sided fill).
    double sign = area2 > 0.0 ? 1.0 : -1.0;
    area2 *= sign;

    const double min_u = std::min({u[0], u[1], u[2]});
    const double max_u = std::max({u[0], u[1], u[2]});
    const double min_v = std::min({v[0], v[1], v[2]});
    const double max_v = std::max({v[0], v[1], v[2]});
    const int x0 = std::max(0, static_cast<int>(std::ceil(min_u - 0.5)));
    const int x1 = std::min(target.width - 1, static_cast<int>(std::floor(max_u - 0.5)));
    const int y0 = std::max(0, static_cast<int>(std::ceil(min_v - 0.5)));
    const int y1 = std::min(target.height - 1, static_cast<int>(std::floor(max_v - 0.5)));

    for (int py = y0; py <= y1; ++py) {
        const double sy = py + 0.5;
        for (int px = x0; px <= x1; ++px) {
            const double sx = px + 0.5;
            const double e0 = sign * edge_function(u[1], v[1], u[2], v[2], sx, sy);
            const double e1 = sign * edge_function(u[2], v[2], u[0], v[0], sx, sy);
            const double e2 = sign * edge_function(u[0], v[0], u[1], v[1], sx, sy);
            if (e0 < 0.0 || e1 < 0.0 || e2 < 0.0) continue;

            const double l0 = e0 / area2;
            const double l1 = e1 / area2;
            const double l2 = e2 / area2;
            const double inv_z = l0 / z[0] + l1 / z[1] + l2 / z[2];
            if (inv_z <= 0.0) continue;
            const double depth = 1.0 / inv_z;
            if (depth <= cam.near_clip) continue;

            const std::size_t idx = static_cast<std::size_t>(py) * target.width + px;
            if (depth >= target.depth[idx]) continue;

            const double w0 = (l0 / z[0]) / inv_z;
            const double w1 = (l1 / z[1]) / inv_z;
            const double w2 = (l2 / z[2]) / inv_z;
            target.depth[idx] = depth;
            target.world[idx] = a.world * w0 + b.world * w1 + c.world * w2;
            Vec3 n = a.nrm * w0 + b.nrm * w1 + c.nrm * w2;
            const double len = norm(n);
            target.normal[idx] = len > 0.0 ? n * (1.0 / len) : Vec3{0.0, 0.0, 1.0};
            target.material[idx] = src.material_index;
            target.instance[idx] = src.instance_id;
            target.part[idx] = src.part_index;
            target.semantic[idx] = src.semantic;
        }
    }
}

inline void raster_draw_triangle(RasterTarget& target, const CameraModel& cam,
                                 const DrawTriangle& tri) {
    ClipVertex in[3];
    for (int i = 0; i < 3; ++i)
        in[i] = {world_to_camera(cam, tri.v[i]), tri.v[i], tri.n[i]};
    ClipVertex clipped[4];
    const int n = clip_near_plane(in, cam.near_clip, clipped);
    if (n < 3) return;
    raster_triangle(target, cam, tri, clipped[0], clipped[1], clipped[2]);
    if (n == 4) raster_triangle(target, cam, tri, clipped[0], clipped[2], clipped[3]);
}

inline void fill_background(std::vector<double>& plane, int width, int height,
                            const BackgroundSpec& bg, const RenderOptions& options) {
    if (options.background_image && options.background_image->valid()) {
        const ImageRgb8& img = *options.background_image;
        for (int y = 0; y < height; ++y) {
            const int sy = static_cast<int>(static_cast<std::int64_t>(y) * img.height / height);
            for (int x = 0; x < width; ++x) {
                const int sx = static_cast<int>(static_cast<std::int64_t>(x) * img.width / width);
                const std::size_t src = (static_cast<std::size_t>(sy) * img.width + sx) * 3;
                const std::size_t dst = (static_cast<std::size_t>(y) * width + x) * 3;
                for (int c = 0; c < 3; ++c) plane[dst + c] = img.pixels[src + c] / 255.0;
            }
        }
        return;
    }
    for (std::size_t i = 0; i < plane.size(); i += 3)
        for (int c = 0; c < 3; ++c) plane[i + c] = bg.color[c];
}

}  // namespace detail

inline FrameBuffers render_frame(const ComposedScene& scene, int width, int height,
                                 const RenderOptions& options = {}) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("render_frame: resolution must be at least 1x1");
    if (scene.camera.width != width || scene.camera.height != height) {
        std::ostringstream os;
        os << "render_frame: camera resolution " << scene.camera.width << "x"
           << scene.camera.height << " does not match render target " << width << "x" << height;
        throw std::invalid_argument(os.str());
    }
    if (auto problems = validate_scene(scene); !problems.empty()) {
        std::string joined = "render_frame: invalid scene:";
        for (const auto& p : problems) joined += " [" + p + "]";
        throw std::invalid_argument(joined);
    }

    const CameraModel& cam = scene.camera;
    const DrawList list = build_draw_list(scene, options);
    const std::size_t pixels = static_cast<std::size_t>(width) * height;

    // Working color stays in double precision until the final quantize so the
    // water blend does not compound 8-bit rounding.
    std::vector<double> color(pixels * 3, 0.0);
    detail::fill_background(color, width, height, scene.background, options);

    detail::RasterTarget opaque(width, height);
    for (const DrawTriangle& tri : list.triangles)
        if (!tri.is_water) detail::raster_draw_triangle(opaque, cam, tri);

    FrameBuffers fb(width, height);
    const Vec3 eye = cam.world_position();
    const std::span<const LightParams> lights(scene.lights);

    for (std::size_t idx = 0; idx < pixels; ++idx) {
        if (!std::isfinite(opaque.depth[idx])) continue;
        const Vec3& p = opaque.world[idx];
        const Vec3& n = opaque.normal[idx];
        const Rgb rgb = shade_surface(list.materials[opaque.material[idx]], n, lights,
                                      normalized(eye - p));
        for (int c = 0; c < 3; ++c) color[idx * 3 + c] = rgb[c];
        fb.depth[idx] = static_cast<float>(opaque.depth[idx]);
        fb.normal[idx * 3 + 0] = static_cast<float>(n.x);
        fb.normal[idx * 3 + 1] = static_cast<float>(n.y);
        fb.normal[idx * 3 + 2] = static_cast<float>(n.z);
        fb.instance[idx] = opaque.instance[idx];
        fb.semantic[idx] = static_cast<std::uint16_t>(opaque.semantic[idx]);
        fb.fine_grained[idx] = pack_fine_grained(opaque.instance[idx], opaque.part[idx]);
    }

    if (scene.water) {
        const WaterSurfaceParams& water = *scene.water;
        detail::RasterTarget wet(width, height);
        for (const DrawTriangle& tri : list.triangles)
            if (tri.is_water) detail::raster_draw_triangle(wet, cam, tri);

        for (std::size_t idx = 0; idx < pixels; ++idx) {
            if (!std::isfinite(wet.depth[idx])) continue;
            if (wet.depth[idx] >= opaque.depth[idx]) continue;  // submerged geometry occludes

            const Vec3& p = wet.world[idx];
            // Analytic normal at the exact surface point realizes the
            // roughness / wavy-texture perturbation per pixel instead of
            // inheriting the tessellation's vertex normals.
            const Vec3 n = wave_normal(water, p.x, p.y, scene.time);
            Rgb rgb = shade_surface(water.material, n, lights, normalized(eye - p));
            const double foam = foam_mask(water, p.x, p.y, scene.time);
            for (int c = 0; c < 3; ++c) rgb[c] = lerp(rgb[c], 1.0, foam);

            const Rgb under{color[idx * 3], color[idx * 3 + 1], color[idx * 3 + 2]};
            const Rgb blended = composite_water(rgb, under, water.material.opacity);
            for (int c = 0; c < 3; ++c) color[idx * 3 + c] = blended[c];

            fb.depth[idx] = static_cast<float>(wet.depth[idx]);
            fb.normal[idx * 3 + 0] = static_cast<float>(n.x);
            fb.normal[idx * 3 + 1] = static_cast<float>(n.y);
            fb.normal[idx * 3 + 2] = static_cast<float>(n.z);
            fb.instance[idx] = kWaterInstanceId;
            fb.semantic[idx] = static_cast<std::uint16_t>(SemanticClass::flood);
            fb.fine_grained[idx] = pack_fine_grained(kWaterInstanceId, 0);
        }
    }

    for (std::size_t i = 0; i < color.size(); ++i) fb.color[i] = quantize_channel(color[i]);
    return fb;
}

}  // namespace floodsynth
