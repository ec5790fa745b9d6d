// Dataset manifest: the machine-readable index of one generation run. Holds
// the config snapshot (exactly as configured, so re-running the file
// reproduces the dataset), one entry per frame with seed, level, relative
// file names and instance labels, and the aggregate statistics block. JSON
// keys are emitted sorted, which keeps manifest bytes deterministic.
#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "floodsynth/annotate/record.hpp"
#include "floodsynth/pipeline/errors.hpp"

namespace floodsynth {

// The nine per-frame products, as filename suffixes on the frame stem.
inline const std::vector<std::string>& frame_file_suffixes() {
    static const std::vector<std::string> kSuffixes{
        ".png",      ".depth.pfm", ".normal.pfm", ".inst.pgm", ".sem.pgm",
        ".fine.pgm", ".ply",       ".txt",        ".camera.json"};
    return kSuffixes;
}

inline std::string frame_stem(std::uint64_t frame_id) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "frame_%06llu", static_cast<unsigned long long>(frame_id));
    return buf;
}

struct FrameEntry {
    std::uint64_t frame_id = 0;
    std::uint64_t seed = 0;
    int scene_flood_level = 0;
    std::vector<std::string> files;  // relative to the dataset directory
    std::vector<InstanceLabel> labels;
};

struct DatasetManifest {
    nlohmann::json config_snapshot;  // serialized GenerationConfig
    std::vector<FrameEntry> entries;
    nlohmann::json statistics;  // StatsTable JSON, filled after generation
};

inline nlohmann::json frame_entry_to_json(const FrameEntry& e) {
    nlohmann::json j;
    j["frame_id"] = e.frame_id;
    j["seed"] = e.seed;
    j["scene_flood_level"] = e.scene_flood_level;
    j["files"] = e.files;
    nlohmann::json labels = nlohmann::json::array();
    for (const InstanceLabel& l : e.labels) labels.push_back(instance_label_to_json(l));
    j["labels"] = labels;
    return j;
}

inline FrameEntry frame_entry_from_json(const nlohmann::json& j) {
    FrameEntry e;
    e.frame_id = j.at("frame_id").get<std::uint64_t>();
    e.seed = j.at("seed").get<std::uint64_t>();
    e.scene_flood_level = j.at("scene_flood_level").get<int>();
    e.files = j.at("files").get<std::vector<std::string>>();
    for (const auto& l : j.at("labels")) e.labels.push_back(instance_label_from_json(l));
    return e;
}

inline std::string serialize_manifest(const DatasetManifest& m) {
    nlohmann::json j;
    j["config"] = m.config_snapshot;
    nlohmann::json entries = nlohmann::json::array();
    for (const FrameEntry& e : m.entries) entries.push_back(frame_entry_to_json(e));
    j["frames"] = entries;
    j["statistics"] = m.statistics;
    return j.dump(2) + "\n";
}

inline DatasetManifest parse_manifest(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("manifest: malformed JSON: ") + e.what());
    }
    DatasetManifest m;
    try {
        m.config_snapshot = j.at("config");
        for (const auto& e : j.at("frames")) m.entries.push_back(frame_entry_from_json(e));
        if (j.contains("statistics")) m.statistics = j.at("statistics");
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("manifest: missing or malformed field: ") + e.what());
    }
    std::sort(m.entries.begin(), m.entries.end(),
              [](const FrameEntry& a, const FrameEntry& b) { return a.frame_id < b.frame_id; });
    return m;
}

}  // namespace floodsynth
