// Dataset statistics: per-level image and instance counts with flooded and
// overall totals, computed from the manifest. Printable as an aligned table
// or as JSON.
#pragma once

#include <json.hpp>

#include <array>
#include <cstdint>
#include <sstream>
#include <string>

#include "floodsynth/pipeline/manifest.hpp"

namespace floodsynth {

struct StatsTable {
    std::array<long, 5> image_count{};     // by scene flood level 0..4
    std::array<long, 5> instance_count{};  // by per-instance flood level

    long total_images() const {
        long n = 0;
        for (long c : image_count) n += c;
        return n;
    }
    long total_instances() const {
        long n = 0;
        for (long c : instance_count) n += c;
        return n;
    }
    long flooded_images() const { return total_images() - image_count[0]; }
    long flooded_instances() const { return total_instances() - instance_count[0]; }
};

inline StatsTable dataset_stats(const DatasetManifest& m) {
    StatsTable t;
    for (const FrameEntry& e : m.entries) {
        if (e.scene_flood_level >= 0 && e.scene_flood_level <= 4)
            ++t.image_count[e.scene_flood_level];
        for (const InstanceLabel& l : e.labels)
            if (l.flood_level >= 0 && l.flood_level <= 4) ++t.instance_count[l.flood_level];
    }
    return t;
}

inline std::string stats_text(const StatsTable& t) {
    std::ostringstream os;
    auto row = [&](const std::string& name, const std::string& images,
                   const std::string& instances) {
        os << name << std::string(name.size() < 10 ? 10 - name.size() : 1, ' ')
           << std::string(images.size() < 12 ? 12 - images.size() : 1, ' ') << images
           << std::string(instances.size() < 12 ? 12 - instances.size() : 1, ' ') << instances
           << "\n";
    };
    row("level", "images", "instances");
    for (int level = 0; level <= 4; ++level)
        row(std::to_string(level), std::to_string(t.image_count[level]),
            std::to_string(t.instance_count[level]));
    row("flooded", std::to_string(t.flooded_images()), std::to_string(t.flooded_instances()));
    row("total", std::to_string(t.total_images()), std::to_string(t.total_instances()));
    return os.str();
}

inline nlohmann::json stats_to_json(const StatsTable& t) {
    nlohmann::json j;
    for (int level = 0; level <= 4; ++level) {
        j["levels"][std::to_string(level)] = {{"images", t.image_count[level]},
                                              {"instances", t.instance_count[level]}};
    }
    j["flooded"] = {{"images", t.flooded_images()}, {"instances", t.flooded_instances()}};
    j["total"] = {{"images", t.total_images()}, {"instances", t.total_instances()}};
    return j;
}

}  // namespace floodsynth
