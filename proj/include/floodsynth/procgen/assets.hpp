// Asset catalog: the ingestion point for externally generated car meshes,
// plus a built-in procedural car so the pipeline runs with no files at all.
// Ingested meshes are normalized: xy-centered, floored to z = 0, and
// uniformly scaled to the canonical height (instance poses are rigid, so
// scale has to be baked into the vertices).
#pragma once

#include <fstream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "floodsynth/core/mesh.hpp"
#include "floodsynth/core/scene.hpp"

namespace floodsynth {

struct AssetEntry {
    std::shared_ptr<const TriangleMesh> mesh;
    SemanticClass semantic_class = SemanticClass::car;
    double canonical_height = 1.5;  // meters, > 0
};

struct AssetCatalog {
    std::vector<AssetEntry> entries;

    bool has_car() const {
        for (const auto& e : entries)
            if (e.semantic_class == SemanticClass::car) return true;
        return false;
    }

    std::vector<std::size_t> car_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].semantic_class == SemanticClass::car) out.push_back(i);
        return out;
    }
};

inline TriangleMesh normalize_asset_mesh(TriangleMesh mesh, double canonical_height) {
    if (canonical_height <= 0.0)
        throw std::invalid_argument("canonical_height must be positive");
    const Vec3 ext = mesh.object_aabb.extents();
    if (ext.z <= 0.0) throw std::invalid_argument("asset mesh has zero height");
    const double scale = canonical_height / ext.z;
    const Vec3 c = mesh.object_aabb.center();
    for (Vec3& v : mesh.vertices) {
        v.x = (v.x - c.x) * scale;
        v.y = (v.y - c.y) * scale;
        v.z = (v.z - mesh.object_aabb.min.z) * scale;
    }
    compute_object_aabb(mesh);
    return mesh;
}

// Boxy sedan, 4.4 m x 1.8 m x 1.5 m, length along +x, wheels at z = 0.
// Six parts so the fine-grained segmentation has something to show.
inline std::shared_ptr<const TriangleMesh> make_default_car_mesh() {
    TriangleMesh car;
    const double half_len = 2.2, half_wid = 0.9;
    append_box_part(car, {-half_len, -half_wid, 0.3}, {half_len, half_wid, 0.95}, "body");
    append_box_part(car, {-1.2, -0.75, 0.95}, {0.9, 0.75, 1.5}, "cabin");
    const double wr = 0.35;  // wheel "radius" (box half-height)
    const double wx = 1.4, wy = half_wid;
    append_box_part(car, {wx - wr, wy - 0.25, 0.0}, {wx + wr, wy + 0.05, 2 * wr}, "wheel_fr");
    append_box_part(car, {wx - wr, -wy - 0.05, 0.0}, {wx + wr, -wy + 0.25, 2 * wr}, "wheel_fl");
    append_box_part(car, {-wx - wr, wy - 0.25, 0.0}, {-wx + wr, wy + 0.05, 2 * wr}, "wheel_rr");
    append_box_part(car, {-wx - wr, -wy - 0.05, 0.0}, {-wx + wr, -wy + 0.25, 2 * wr}, "wheel_rl");
    return std::make_shared<const TriangleMesh>(std::move(car));
}

inline AssetCatalog make_default_catalog(double canonical_height = 1.5) {
    AssetCatalog catalog;
    auto mesh = make_default_car_mesh();
    if (std::abs(mesh->object_aabb.extents().z - canonical_height) > 1e-12)
        mesh = std::make_shared<const TriangleMesh>(
            normalize_asset_mesh(*mesh, canonical_height));
    catalog.entries.push_back({mesh, SemanticClass::car, canonical_height});
    return catalog;
}

inline AssetEntry load_asset_obj(const std::string& path, double canonical_height) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open asset mesh: " + path);
    TriangleMesh mesh;
    try {
        mesh = load_mesh_obj(in);
    } catch (const MeshParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return {std::make_shared<const TriangleMesh>(
                normalize_asset_mesh(std::move(mesh), canonical_height)),
            SemanticClass::car, canonical_height};
}

}  // namespace floodsynth
