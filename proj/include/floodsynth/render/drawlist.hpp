// Flattens a scene into the world-space triangle soup that both the
// rasterizer and the ray-cast oracle consume: ground quad first (instance 0),
// then object instances in ascending id order, then the tessellated water
// patch (reserved id 255). Draw order is the tie-break order, so both
// renderers resolve coincident surfaces identically.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "floodsynth/core/scene.hpp"
#include "floodsynth/flood/waves.hpp"
#include "floodsynth/render/framebuffers.hpp"

namespace floodsynth {

struct RenderOptions {
    int water_grid = 128;  // water tessellation, cells per side
    // Pre-decoded pixels for BackgroundSpec::image; the renderer itself does
    // no file I/O. Falls back to the flat background color when absent.
    std::optional<ImageRgb8> background_image;
};

struct DrawTriangle {
    Vec3 v[3];
    Vec3 n[3];
    std::uint16_t instance_id = 0;
    std::uint16_t part_index = 0;
    SemanticClass semantic = SemanticClass::other;
    std::uint32_t material_index = 0;
    bool is_water = false;
};

struct DrawList {
    std::vector<DrawTriangle> triangles;
    std::vector<MaterialParams> materials;
};

// Semantic buffer value for an instance id under this scene's class map.
inline SemanticClass semantic_code_for(const ComposedScene& s, std::uint16_t instance_id) {
    if (instance_id == 0) return SemanticClass::ground;
    if (instance_id == kWaterInstanceId && s.water) return SemanticClass::flood;
    for (const auto& inst : s.instances)
        if (inst.instance_id == instance_id) return inst.semantic_class;
    return SemanticClass::other;
}

inline DrawList build_draw_list(const ComposedScene& s, const RenderOptions& options = {}) {
    DrawList list;

    // Ground quad (instance 0, ground fill). An empty rect draws no ground.
    list.materials.push_back(s.ground_material);
    if (s.ground_rect.valid()) {
        const Rect2& g = s.ground_rect;
        const double z = s.ground_height;
        const Vec3 a{g.x0, g.y0, z}, b{g.x1, g.y0, z}, c{g.x1, g.y1, z}, d{g.x0, g.y1, z};
        const Vec3 up{0.0, 0.0, 1.0};
        DrawTriangle t0{{a, b, c}, {up, up, up}, 0, 0, SemanticClass::ground, 0, false};
        DrawTriangle t1{{a, c, d}, {up, up, up}, 0, 0, SemanticClass::ground, 0, false};
        list.triangles.push_back(t0);
        list.triangles.push_back(t1);
    }

    std::vector<const ObjectInstance*> ordered;
    ordered.reserve(s.instances.size());
    for (const auto& inst : s.instances) ordered.push_back(&inst);
    std::sort(ordered.begin(), ordered.end(),
              [](const ObjectInstance* a, const ObjectInstance* b) {
                  return a->instance_id < b->instance_id;
              });

    for (const ObjectInstance* inst : ordered) {
        const std::uint32_t mat = static_cast<std::uint32_t>(list.materials.size());
        list.materials.push_back(inst->material);
        const TriangleMesh& mesh = *inst->mesh;
        const Mat3& r = inst->pose.rotation;
        for (std::size_t ti = 0; ti < mesh.triangles.size(); ++ti) {
            const auto& tri = mesh.triangles[ti];
            DrawTriangle t;
            for (int k = 0; k < 3; ++k) {
                t.v[k] = inst->pose.apply(mesh.vertices[tri[k]]);
                t.n[k] = r * mesh.normals[tri[k]];
            }
            t.instance_id = inst->instance_id;
            t.part_index = static_cast<std::uint16_t>(mesh.part_of_triangle(ti));
            t.semantic = inst->semantic_class;
            t.material_index = mat;
            list.triangles.push_back(t);
        }
    }

    if (s.water) {
        const WaterSurfaceParams& w = *s.water;
        const std::uint32_t mat = static_cast<std::uint32_t>(list.materials.size());
        list.materials.push_back(w.material);
        const int n = std::max(1, options.water_grid);
        const Rect2& g = s.ground_rect;
        const double dx = g.width() / n;
        const double dy = g.height() / n;

        std::vector<Vec3> grid_pos((n + 1) * (n + 1));
        std::vector<Vec3> grid_nrm((n + 1) * (n + 1));
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i <= n; ++i) {
                const double x = g.x0 + i * dx;
                const double y = g.y0 + j * dy;
                grid_pos[j * (n + 1) + i] = {x, y, wave_height(w, x, y, s.time)};
                grid_nrm[j * (n + 1) + i] = wave_normal(w, x, y, s.time);
            }
        }
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                const int i00 = j * (n + 1) + i;
                const int i10 = i00 + 1;
                const int i01 = i00 + (n + 1);
                const int i11 = i01 + 1;
                DrawTriangle t0{{grid_pos[i00], grid_pos[i10], grid_pos[i11]},
                                {grid_nrm[i00], grid_nrm[i10], grid_nrm[i11]},
                                kWaterInstanceId, 0, SemanticClass::flood, mat, true};
                DrawTriangle t1{{grid_pos[i00], grid_pos[i11], grid_pos[i01]},
                                {grid_nrm[i00], grid_nrm[i11], grid_nrm[i01]},
                                kWaterInstanceId, 0, SemanticClass::flood, mat, true};
                list.triangles.push_back(t0);
                list.triangles.push_back(t1);
            }
        }
    }
    return list;
}

}  // namespace floodsynth
