// Generation config: the JSON-serialized form of every scene control knob
// plus bookkeeping (seed, quotas, output directory). Parsing applies
// defaults, collects warnings for unknown keys, and fails fast on missing
// required keys, invariant violations, or referenced files that do not
// exist. serialize() round-trips through parse_config unchanged.
#pragma once

#include <json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floodsynth/flood/levels.hpp"
#include "floodsynth/flood/waves.hpp"
#include "floodsynth/pipeline/errors.hpp"
#include "floodsynth/procgen/layout.hpp"
#include "floodsynth/procgen/placement.hpp"

namespace floodsynth {

struct GenerationConfig {
    int width = 512;
    int height = 512;
    std::uint64_t master_seed = 0;
    std::string output_dir;
    std::array<long, 5> frames_per_level{0, 0, 0, 0, 0};
    int cars_per_frame = 3;
    int min_pixels = 25;
    int water_grid = 128;
    double fov_x_deg = 60.0;

    LayoutParams layout;
    std::optional<std::string> layout_path;  // ingest instead of generating
    std::vector<std::string> asset_paths;    // empty = built-in car mesh
    RandomizationRanges randomization;
    FloodLevelTable flood_table;

    // Template for flooded frames; base_level and level_class are set per
    // frame from the flood table.
    WaterSurfaceParams water{.base_level = 0.0,
                             .level_class = 1,
                             .waves = {{0.05, 0.9, 0.25, 0.0}, {0.02, -0.35, 1.2, 1.7}},
                             .gravity = 9.81,
                             .foam_threshold = 0.6,
                             .roughness_noise_amp = 0.15,
                             .material = {.base_color = {0.16, 0.30, 0.42},
                                          .roughness = 0.25,
                                          .opacity = 0.65,
                                          .specular = 0.6},
                             .wavy_texture = std::nullopt};

    Rgb background_color{0.55, 0.65, 0.8};
    std::optional<std::string> background_image;
    double light_elevation_deg = 55.0;
    double light_ambient = 0.2;

    std::vector<std::string> warnings;  // unknown-key notes from parsing

    long total_frames() const {
        long n = 0;
        for (long c : frames_per_level) n += c;
        return n;
    }
};

namespace detail {

inline Interval interval_from_json(const nlohmann::json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError("config: " + key + " must be a [lo, hi] number pair");
    Interval iv{j[0].get<double>(), j[1].get<double>()};
    if (!iv.valid()) throw ConfigError("config: " + key + " has lo > hi");
    return iv;
}

inline nlohmann::json interval_to_json(const Interval& iv) {
    return nlohmann::json::array({iv.lo, iv.hi});
}

// Applies known keys of `src` through `handlers`; anything else becomes a
// warning with its JSON path.
template <typename Handlers>
inline void apply_keys(const nlohmann::json& src, const std::string& prefix,
                       const Handlers& handlers, std::vector<std::string>& warnings) {
    for (const auto& [key, value] : src.items()) {
        auto it = handlers.find(key);
        if (it == handlers.end())
            warnings.push_back("unknown key " + prefix + key);
        else
            it->second(value);
    }
}

inline void require_file(const std::string& path, const std::string& what) {
    if (!std::filesystem::exists(path))
        throw ConfigError("config: " + what + " does not exist: " + path);
}

}  // namespace detail

inline GenerationConfig parse_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");

    GenerationConfig cfg;
    using Handler = std::function<void(const nlohmann::json&)>;
    auto num = [](const nlohmann::json& v, const char* key) {
        if (!v.is_number()) throw ConfigError(std::string("config: ") + key + " must be a number");
    };

    const std::map<std::string, Handler> handlers{
        {"resolution",
         [&](const nlohmann::json& v) {
             if (!v.is_array() || v.size() != 2)
                 throw ConfigError("config: resolution must be [width, height]");
             cfg.width = v[0].get<int>();
             cfg.height = v[1].get<int>();
         }},
        {"master_seed",
         [&](const nlohmann::json& v) {
             num(v, "master_seed");
             cfg.master_seed = v.get<std::uint64_t>();
         }},
        {"output_dir",
         [&](const nlohmann::json& v) { cfg.output_dir = v.get<std::string>(); }},
        {"frames_per_level",
         [&](const nlohmann::json& v) {
             if (!v.is_object())
                 throw ConfigError("config: frames_per_level must map level to count");
             for (const auto& [k, count] : v.items()) {
                 const int level = std::stoi(k);
                 if (level < 0 || level > 4)
                     throw ConfigError("config: frames_per_level level outside 0..4: " + k);
                 const long c = count.get<long>();
                 if (c < 0) throw ConfigError("config: frames_per_level[" + k + "] is negative");
                 cfg.frames_per_level[level] = c;
             }
         }},
        {"cars_per_frame",
         [&](const nlohmann::json& v) { cfg.cars_per_frame = v.get<int>(); }},
        {"min_pixels", [&](const nlohmann::json& v) { cfg.min_pixels = v.get<int>(); }},
        {"water_grid", [&](const nlohmann::json& v) { cfg.water_grid = v.get<int>(); }},
        {"fov_x_deg", [&](const nlohmann::json& v) { cfg.fov_x_deg = v.get<double>(); }},
        {"layout",
         [&](const nlohmann::json& v) {
             if (v.is_string()) {
                 cfg.layout_path = v.get<std::string>();
                 return;
             }
             if (!v.is_object())
                 throw ConfigError("config: layout must be an object or a file path");
             const std::map<std::string, Handler> sub{
                 {"blocks_x", [&](const nlohmann::json& s) { cfg.layout.blocks_x = s.get<int>(); }},
                 {"blocks_y", [&](const nlohmann::json& s) { cfg.layout.blocks_y = s.get<int>(); }},
                 {"block_size",
                  [&](const nlohmann::json& s) { cfg.layout.block_size = s.get<double>(); }},
                 {"road_width",
                  [&](const nlohmann::json& s) { cfg.layout.road_width = s.get<double>(); }},
                 {"building_height_range",
                  [&](const nlohmann::json& s) {
                      cfg.layout.building_height_range =
                          detail::interval_from_json(s, "layout.building_height_range");
                  }},
                 {"buildings_per_block",
                  [&](const nlohmann::json& s) { cfg.layout.buildings_per_block = s.get<int>(); }},
             };
             detail::apply_keys(v, "layout.", sub, cfg.warnings);
         }},
        {"assets",
         [&](const nlohmann::json& v) {
             if (!v.is_array()) throw ConfigError("config: assets must be a list of paths");
             for (const auto& p : v) cfg.asset_paths.push_back(p.get<std::string>());
         }},
        {"randomization",
         [&](const nlohmann::json& v) {
             if (!v.is_object()) throw ConfigError("config: randomization must be an object");
             RandomizationRanges& r = cfg.randomization;
             const std::map<std::string, Handler> sub{
                 {"camera_height",
                  [&](const nlohmann::json& s) {
                      r.camera_height = detail::interval_from_json(s, "randomization.camera_height");
                  }},
                 {"camera_pitch_deg",
                  [&](const nlohmann::json& s) {
                      r.camera_pitch = detail::interval_from_json(s, "randomization.camera_pitch_deg");
                  }},
                 {"camera_yaw_deg",
                  [&](const nlohmann::json& s) {
                      r.camera_yaw = detail::interval_from_json(s, "randomization.camera_yaw_deg");
                  }},
                 {"light_intensity",
                  [&](const nlohmann::json& s) {
                      r.light_intensity = detail::interval_from_json(s, "randomization.light_intensity");
                  }},
                 {"light_azimuth_deg",
                  [&](const nlohmann::json& s) {
                      r.light_azimuth = detail::interval_from_json(s, "randomization.light_azimuth_deg");
                  }},
                 {"object_yaw_deg",
                  [&](const nlohmann::json& s) {
                      r.object_yaw = detail::interval_from_json(s, "randomization.object_yaw_deg");
                  }},
                 {"object_jitter_xy",
                  [&](const nlohmann::json& s) {
                      r.object_jitter_xy = detail::interval_from_json(s, "randomization.object_jitter_xy");
                  }},
                 {"water_level_jitter",
                  [&](const nlohmann::json& s) {
                      r.water_level_jitter =
                          detail::interval_from_json(s, "randomization.water_level_jitter");
                  }},
             };
             detail::apply_keys(v, "randomization.", sub, cfg.warnings);
         }},
        {"flood_table",
         [&](const nlohmann::json& v) {
             if (!v.is_object()) throw ConfigError("config: flood_table must be an object");
             const std::map<std::string, Handler> sub{
                 {"thresholds",
                  [&](const nlohmann::json& s) {
                      if (!s.is_array() || s.size() != 3)
                          throw ConfigError("config: flood_table.thresholds needs 3 numbers");
                      for (int i = 0; i < 3; ++i)
                          cfg.flood_table.thresholds[i] = s[i].get<double>();
                  }},
                 {"reference_height",
                  [&](const nlohmann::json& s) {
                      cfg.flood_table.reference_height = s.get<double>();
                  }},
             };
             detail::apply_keys(v, "flood_table.", sub, cfg.warnings);
         }},
        {"water",
         [&](const nlohmann::json& v) {
             if (!v.is_object()) throw ConfigError("config: water must be an object");
             WaterSurfaceParams& w = cfg.water;
             const std::map<std::string, Handler> sub{
                 {"waves",
                  [&](const nlohmann::json& s) {
                      if (!s.is_array() || s.empty())
                          throw ConfigError("config: water.waves must be a non-empty array");
                      w.waves.clear();
                      for (const auto& wj : s) {
                          WaveComponent c;
                          c.amplitude = wj.at("amplitude").get<double>();
                          c.kx = wj.value("kx", 1.0);
                          c.ky = wj.value("ky", 0.0);
                          c.phase = wj.value("phase", 0.0);
                          w.waves.push_back(c);
                      }
                  }},
                 {"gravity", [&](const nlohmann::json& s) { w.gravity = s.get<double>(); }},
                 {"foam_threshold",
                  [&](const nlohmann::json& s) { w.foam_threshold = s.get<double>(); }},
                 {"roughness_noise_amp",
                  [&](const nlohmann::json& s) { w.roughness_noise_amp = s.get<double>(); }},
                 {"base_color",
                  [&](const nlohmann::json& s) {
                      for (int i = 0; i < 3; ++i) w.material.base_color[i] = s.at(i).get<double>();
                  }},
                 {"roughness",
                  [&](const nlohmann::json& s) { w.material.roughness = s.get<double>(); }},
                 {"opacity",
                  [&](const nlohmann::json& s) { w.material.opacity = s.get<double>(); }},
                 {"specular",
                  [&](const nlohmann::json& s) { w.material.specular = s.get<double>(); }},
                 {"wavy_texture",
                  [&](const nlohmann::json& s) { w.wavy_texture = s.get<std::string>(); }},
             };
             detail::apply_keys(v, "water.", sub, cfg.warnings);
         }},
        {"background",
         [&](const nlohmann::json& v) {
             if (!v.is_object()) throw ConfigError("config: background must be an object");
             const std::map<std::string, Handler> sub{
                 {"color",
                  [&](const nlohmann::json& s) {
                      for (int i = 0; i < 3; ++i) cfg.background_color[i] = s.at(i).get<double>();
                  }},
                 {"image",
                  [&](const nlohmann::json& s) { cfg.background_image = s.get<std::string>(); }},
             };
             detail::apply_keys(v, "background.", sub, cfg.warnings);
         }},
        {"light",
         [&](const nlohmann::json& v) {
             if (!v.is_object()) throw ConfigError("config: light must be an object");
             const std::map<std::string, Handler> sub{
                 {"elevation_deg",
                  [&](const nlohmann::json& s) { cfg.light_elevation_deg = s.get<double>(); }},
                 {"ambient",
                  [&](const nlohmann::json& s) { cfg.light_ambient = s.get<double>(); }},
             };
             detail::apply_keys(v, "light.", sub, cfg.warnings);
         }},
    };
    detail::apply_keys(j, "", handlers, cfg.warnings);

    // Required keys.
    if (!j.contains("resolution")) throw ConfigError("config: missing required key resolution");
    if (!j.contains("master_seed")) throw ConfigError("config: missing required key master_seed");
    if (!j.contains("output_dir")) throw ConfigError("config: missing required key output_dir");

    // Invariants.
    if (cfg.width < 1 || cfg.height < 1) throw ConfigError("config: resolution must be >= 1x1");
    if (cfg.cars_per_frame < 0) throw ConfigError("config: cars_per_frame is negative");
    if (cfg.min_pixels < 1) throw ConfigError("config: min_pixels must be >= 1");
    if (cfg.water_grid < 1) throw ConfigError("config: water_grid must be >= 1");
    if (cfg.fov_x_deg <= 0.0 || cfg.fov_x_deg >= 180.0)
        throw ConfigError("config: fov_x_deg outside (0, 180)");
    if (!cfg.layout_path && !cfg.layout.valid()) throw ConfigError("config: invalid layout");
    if (!cfg.randomization.valid()) throw ConfigError("config: invalid randomization ranges");
    if (!cfg.flood_table.valid()) throw ConfigError("config: invalid flood_table");
    if (cfg.water.waves.empty()) throw ConfigError("config: water.waves must not be empty");
    if (cfg.light_ambient < 0.0 || cfg.light_ambient > 1.0)
        throw ConfigError("config: light.ambient outside [0,1]");
    if (cfg.light_elevation_deg <= 0.0 || cfg.light_elevation_deg > 90.0)
        throw ConfigError("config: light.elevation_deg outside (0, 90]");

    // Referenced files must exist at parse time.
    for (const std::string& p : cfg.asset_paths) detail::require_file(p, "asset");
    if (cfg.layout_path) detail::require_file(*cfg.layout_path, "layout file");
    if (cfg.background_image) detail::require_file(*cfg.background_image, "background image");
    if (cfg.water.wavy_texture) detail::require_file(*cfg.water.wavy_texture, "wavy texture");

    return cfg;
}

inline std::string serialize_config(const GenerationConfig& cfg) {
    nlohmann::json j;
    j["resolution"] = {cfg.width, cfg.height};
    j["master_seed"] = cfg.master_seed;
    j["output_dir"] = cfg.output_dir;
    nlohmann::json quotas;
    for (int level = 0; level <= 4; ++level)
        quotas[std::to_string(level)] = cfg.frames_per_level[level];
    j["frames_per_level"] = quotas;
    j["cars_per_frame"] = cfg.cars_per_frame;
    j["min_pixels"] = cfg.min_pixels;
    j["water_grid"] = cfg.water_grid;
    j["fov_x_deg"] = cfg.fov_x_deg;

    if (cfg.layout_path) {
        j["layout"] = *cfg.layout_path;
    } else {
        j["layout"] = {{"blocks_x", cfg.layout.blocks_x},
                       {"blocks_y", cfg.layout.blocks_y},
                       {"block_size", cfg.layout.block_size},
                       {"road_width", cfg.layout.road_width},
                       {"building_height_range",
                        detail::interval_to_json(cfg.layout.building_height_range)},
                       {"buildings_per_block", cfg.layout.buildings_per_block}};
    }
    j["assets"] = cfg.asset_paths;

    const RandomizationRanges& r = cfg.randomization;
    j["randomization"] = {{"camera_height", detail::interval_to_json(r.camera_height)},
                          {"camera_pitch_deg", detail::interval_to_json(r.camera_pitch)},
                          {"camera_yaw_deg", detail::interval_to_json(r.camera_yaw)},
                          {"light_intensity", detail::interval_to_json(r.light_intensity)},
                          {"light_azimuth_deg", detail::interval_to_json(r.light_azimuth)},
                          {"object_yaw_deg", detail::interval_to_json(r.object_yaw)},
                          {"object_jitter_xy", detail::interval_to_json(r.object_jitter_xy)},
                          {"water_level_jitter", detail::interval_to_json(r.water_level_jitter)}};

    j["flood_table"] = {{"thresholds", cfg.flood_table.thresholds},
                        {"reference_height", cfg.flood_table.reference_height}};

    nlohmann::json waves = nlohmann::json::array();
    for (const WaveComponent& c : cfg.water.waves)
        waves.push_back({{"amplitude", c.amplitude}, {"kx", c.kx}, {"ky", c.ky}, {"phase", c.phase}});
    nlohmann::json water = {{"waves", waves},
                            {"gravity", cfg.water.gravity},
                            {"foam_threshold", cfg.water.foam_threshold},
                            {"roughness_noise_amp", cfg.water.roughness_noise_amp},
                            {"base_color", cfg.water.material.base_color},
                            {"roughness", cfg.water.material.roughness},
                            {"opacity", cfg.water.material.opacity},
                            {"specular", cfg.water.material.specular}};
    if (cfg.water.wavy_texture) water["wavy_texture"] = *cfg.water.wavy_texture;
    j["water"] = water;

    nlohmann::json background = {{"color", cfg.background_color}};
    if (cfg.background_image) background["image"] = *cfg.background_image;
    j["background"] = background;

    j["light"] = {{"elevation_deg", cfg.light_elevation_deg}, {"ambient", cfg.light_ambient}};
    return j.dump(2) + "\n";
}

}  // namespace floodsynth
