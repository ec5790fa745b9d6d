// Batch generation: one independent seed stream per frame, frames freely
// parallelizable, manifest assembled as an ordered reduction over frame ids.
// Output bytes are a pure function of the config, so worker count never
// changes the dataset. A `.partial` marker sits in the output directory for
// the duration of a run and stays behind (with the cause) if a frame fails.
#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "floodsynth/annotate/exporters.hpp"
#include "floodsynth/annotate/image_io.hpp"
#include "floodsynth/annotate/record.hpp"
#include "floodsynth/pipeline/config.hpp"
#include "floodsynth/pipeline/manifest.hpp"
#include "floodsynth/pipeline/stats.hpp"
#include "floodsynth/procgen/assets.hpp"
#include "floodsynth/procgen/layout.hpp"
#include "floodsynth/procgen/placement.hpp"
#include "floodsynth/procgen/rng.hpp"
#include "floodsynth/render/pointcloud.hpp"
#include "floodsynth/render/rasterizer.hpp"

namespace floodsynth {

namespace detail {

// Immutable per-run inputs shared by all workers.
struct GenerationContext {
    const GenerationConfig& cfg;
    std::string out_dir;
    AssetCatalog catalog;
    std::optional<UrbanLayout> ingested_layout;
    RenderOptions render_options;
    std::vector<int> frame_level;  // frame_id -> scene flood level
};

inline ComposedScene compose_frame_scene(const GenerationContext& ctx, int level,
                                         RngStream& rng) {
    const GenerationConfig& cfg = ctx.cfg;
    const UrbanLayout layout =
        ctx.ingested_layout ? *ctx.ingested_layout : generate_layout(cfg.layout, rng);

    ComposedScene s;
    s.ground_height = layout.ground_height;
    s.ground_rect = layout.ground_rect;
    s.background.color = cfg.background_color;
    s.background.image = cfg.background_image;

    std::uint16_t next_id = 1;
    for (const BuildingFootprint& b : layout.buildings) {
        ObjectInstance inst;
        inst.instance_id = next_id++;
        inst.semantic_class = SemanticClass::building;
        inst.mesh = std::make_shared<TriangleMesh>(make_box_mesh(
            {b.footprint.x0, b.footprint.y0, layout.ground_height},
            {b.footprint.x1, b.footprint.y1, layout.ground_height + b.height}, "shell"));
        inst.material.base_color = {0.55, 0.53, 0.5};
        inst.material.roughness = 0.85;
        inst.material.specular = 0.02;
        s.instances.push_back(std::move(inst));
    }

    PlacementResult placed = place_objects(layout, ctx.catalog, cfg.randomization,
                                           cfg.cars_per_frame, rng, next_id);
    for (ObjectInstance& inst : placed.instances) s.instances.push_back(std::move(inst));

    const double elevation = deg_to_rad(cfg.light_elevation_deg);
    LightParams light;
    light.direction = normalized({std::cos(elevation), 0.0, std::sin(elevation)});
    light.ambient = cfg.light_ambient;
    s.lights.push_back(light);

    s.camera = make_camera(cfg.width, cfg.height, cfg.fov_x_deg);

    if (level > 0) {
        WaterSurfaceParams w = cfg.water;
        w.level_class = level;
        w.base_level =
            level_to_water_height(level, cfg.flood_table, 0.0, s.ground_height).base_level;
        s.water = w;
    }

    s.time = sample_uniform(rng, 0.0, 1000.0);
    return randomize_scene(s, cfg.randomization, rng, cfg.flood_table);
}

inline FrameEntry generate_one_frame(const GenerationContext& ctx, std::uint64_t frame_id) {
    const GenerationConfig& cfg = ctx.cfg;
    const std::uint64_t seed = derive_frame_seed({cfg.master_seed, frame_id});
    RngStream rng(seed);
    const int level = ctx.frame_level[frame_id];

    const ComposedScene scene = compose_frame_scene(ctx, level, rng);
    const FrameBuffers fb = render_frame(scene, cfg.width, cfg.height, ctx.render_options);
    const AnnotationRecord rec =
        build_annotation_record(scene, fb, cfg.min_pixels, cfg.flood_table, frame_id, seed);

    const std::string stem = frame_stem(frame_id);
    const std::filesystem::path dir(ctx.out_dir);
    FrameEntry entry;
    entry.frame_id = frame_id;
    entry.seed = seed;
    entry.scene_flood_level = rec.scene_flood_level;

    for (const auto& [suffix, blob] : encode_buffers(fb)) {
        write_binary_file((dir / (stem + suffix)).string(), blob);
    }
    write_text_file((dir / (stem + ".ply")).string(),
                    export_pointcloud_ply(depth_to_pointcloud(fb, scene.camera)));
    write_text_file((dir / (stem + ".txt")).string(), export_yolo(rec, fb.width, fb.height));
    write_text_file((dir / (stem + ".camera.json")).string(), export_camera(scene.camera));

    for (const std::string& suffix : frame_file_suffixes()) entry.files.push_back(stem + suffix);
    entry.labels = rec.entries;
    return entry;
}

}  // namespace detail

// Generates the full dataset described by `cfg` into `out_dir` (defaults to
// cfg.output_dir). `jobs` is the worker thread count; results are identical
// for any value.
inline DatasetManifest generate_dataset(const GenerationConfig& cfg, int jobs = 1,
                                        std::string out_dir = "") {
    if (out_dir.empty()) out_dir = cfg.output_dir;
    if (out_dir.empty()) throw ConfigError("generate: no output directory configured");
    if (jobs < 1) jobs = 1;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("generate: cannot create output directory " + out_dir);

    detail::GenerationContext ctx{cfg, out_dir, {}, std::nullopt, {}, {}};
    if (cfg.asset_paths.empty()) {
        ctx.catalog = make_default_catalog(cfg.flood_table.reference_height);
    } else {
        for (const std::string& path : cfg.asset_paths) {
            try {
                ctx.catalog.entries.push_back(
                    load_asset_obj(path, cfg.flood_table.reference_height));
            } catch (const std::exception& e) {
                throw IoError("generate: asset " + path + ": " + e.what());
            }
        }
    }
    if (cfg.layout_path) {
        try {
            ctx.ingested_layout = load_layout_json(read_text_file(*cfg.layout_path));
        } catch (const std::exception& e) {
            throw IoError("generate: layout " + *cfg.layout_path + ": " + e.what());
        }
    }
    ctx.render_options.water_grid = cfg.water_grid;
    if (cfg.background_image) {
        try {
            ctx.render_options.background_image =
                decode_png_rgb8(read_binary_file(*cfg.background_image));
        } catch (const std::exception& e) {
            throw IoError("generate: background image " + *cfg.background_image + ": " +
                          e.what());
        }
    }
    for (int level = 0; level <= 4; ++level)
        for (long i = 0; i < cfg.frames_per_level[level]; ++i) ctx.frame_level.push_back(level);

    const std::string marker = (std::filesystem::path(out_dir) / ".partial").string();
    write_text_file(marker, "generation in progress\n");

    const std::size_t total = ctx.frame_level.size();
    std::vector<FrameEntry> entries(total);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string error_message;

    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            try {
                entries[i] = detail::generate_one_frame(ctx, i);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true))
                    error_message = "frame " + std::to_string(i) + ": " + e.what();
            }
        }
    };

    const int workers = static_cast<int>(std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    if (failed.load()) {
        write_text_file(marker, "generation aborted: " + error_message + "\n");
        throw IoError("generate: aborted: " + error_message);
    }

    DatasetManifest manifest;
    manifest.config_snapshot = nlohmann::json::parse(serialize_config(cfg));
    manifest.entries = std::move(entries);
    manifest.statistics = stats_to_json(dataset_stats(manifest));
    write_text_file((std::filesystem::path(out_dir) / "manifest.json").string(),
                    serialize_manifest(manifest));
    std::filesystem::remove(marker);
    return manifest;
}

}  // namespace floodsynth
