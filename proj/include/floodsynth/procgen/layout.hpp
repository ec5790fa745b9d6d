// Urban layout: either generated as a grid of blocks separated by roads, or
// ingested from a JSON file produced by an external city generator. Roads
// tile exactly the complement of the blocks; vehicles spawn only inside
// road-aligned zones.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "floodsynth/core/math.hpp"
#include "floodsynth/procgen/rng.hpp"

namespace floodsynth {

struct LayoutParams {
    int blocks_x = 2;
    int blocks_y = 2;
    double block_size = 30.0;   // meters
    double road_width = 8.0;    // meters, < block_size
    Interval building_height_range{8.0, 25.0};
    int buildings_per_block = 2;

    bool valid() const {
        return blocks_x > 0 && blocks_y > 0 && block_size > 0.0 && road_width > 0.0 &&
               road_width < block_size && buildings_per_block >= 0 &&
               building_height_range.valid() && building_height_range.lo > 0.0;
    }
};

struct BuildingFootprint {
    Rect2 footprint;
    double height = 0.0;
};

struct UrbanLayout {
    double ground_height = 0.0;
    Rect2 ground_rect;
    std::vector<Rect2> roads;
    std::vector<BuildingFootprint> buildings;
    std::vector<Rect2> spawn_zones;
};

inline std::vector<std::string> validate_layout(const UrbanLayout& layout) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < layout.buildings.size(); ++i)
        for (std::size_t j = i + 1; j < layout.buildings.size(); ++j)
            if (layout.buildings[i].footprint.overlaps(layout.buildings[j].footprint)) {
                v.push_back("buildings " + std::to_string(i) + " and " + std::to_string(j) +
                            " overlap");
            }
    for (std::size_t i = 0; i < layout.spawn_zones.size(); ++i) {
        bool on_road = false;
        for (const Rect2& road : layout.roads)
            if (road.contains(layout.spawn_zones[i])) {
                on_road = true;
                break;
            }
        if (!on_road)
            v.push_back("spawn zone " + std::to_string(i) + " is not on a road");
    }
    return v;
}

// Blocks at pitch = road_width + block_size starting after a perimeter road.
// Vertical roads run full height; horizontal roads are split into the
// segments between them so road rectangles never overlap and together tile
// the complement of the blocks.
inline UrbanLayout generate_layout(const LayoutParams& p, RngStream& stream) {
    if (!p.valid()) throw std::invalid_argument("invalid layout parameters");

    UrbanLayout layout;
    const double pitch = p.road_width + p.block_size;
    const double total_w = p.blocks_x * pitch + p.road_width;
    const double total_h = p.blocks_y * pitch + p.road_width;
    layout.ground_rect = {0.0, 0.0, total_w, total_h};

    for (int i = 0; i <= p.blocks_x; ++i) {
        const double x = i * pitch;
        layout.roads.push_back({x, 0.0, x + p.road_width, total_h});
    }
    for (int j = 0; j <= p.blocks_y; ++j) {
        const double y = j * pitch;
        for (int i = 0; i < p.blocks_x; ++i) {
            const double x = i * pitch + p.road_width;
            layout.roads.push_back({x, y, x + p.block_size, y + p.road_width});
        }
    }

    const double min_side = 0.2 * p.block_size;
    const double max_side = 0.45 * p.block_size;
    for (int j = 0; j < p.blocks_y; ++j) {
        for (int i = 0; i < p.blocks_x; ++i) {
            const Rect2 block{i * pitch + p.road_width, j * pitch + p.road_width,
                              i * pitch + p.road_width + p.block_size,
                              j * pitch + p.road_width + p.block_size};
            std::vector<Rect2> in_block;
            for (int b = 0; b < p.buildings_per_block; ++b) {
                bool placed = false;
                for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
                    const double w = sample_uniform(stream, min_side, max_side);
                    const double d = sample_uniform(stream, min_side, max_side);
                    const double x = sample_uniform(stream, block.x0, block.x1 - w);
                    const double y = sample_uniform(stream, block.y0, block.y1 - d);
                    const Rect2 fp{x, y, x + w, y + d};
                    bool collides = false;
                    for (const Rect2& other : in_block)
                        if (fp.overlaps(other)) {
                            collides = true;
                            break;
                        }
                    if (!collides) {
                        in_block.push_back(fp);
                        layout.buildings.push_back(
                            {fp, sample_uniform(stream, p.building_height_range)});
                        placed = true;
                    }
                }
            }
        }
    }

    // Spawn zones: roads inset enough to keep a car body off the curb.
    const double margin = std::min(1.0, 0.15 * p.road_width);
    for (const Rect2& road : layout.roads) {
        const Rect2 zone = road.inset(margin);
        if (zone.valid()) layout.spawn_zones.push_back(zone);
    }
    return layout;
}

namespace detail {

inline Rect2 rect_from_json(const nlohmann::json& j) {
    return {j.at("x0").get<double>(), j.at("y0").get<double>(),
            j.at("x1").get<double>(), j.at("y1").get<double>()};
}

}  // namespace detail

// Ingests {ground_height, roads:[{x0,y0,x1,y1}], buildings:[{...,height}],
// spawn_zones:[{...}]}; meters, world frame. Throws on malformed documents
// or layouts violating the invariants.
inline UrbanLayout load_layout_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("layout file: ") + e.what());
    }

    UrbanLayout layout;
    try {
        layout.ground_height = j.at("ground_height").get<double>();
        for (const auto& r : j.at("roads")) layout.roads.push_back(detail::rect_from_json(r));
        for (const auto& b : j.at("buildings"))
            layout.buildings.push_back({detail::rect_from_json(b), b.at("height").get<double>()});
        for (const auto& z : j.at("spawn_zones"))
            layout.spawn_zones.push_back(detail::rect_from_json(z));
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("layout file: ") + e.what());
    }

    bool first = true;
    auto grow = [&](const Rect2& r) {
        if (first) {
            layout.ground_rect = r;
            first = false;
        } else {
            layout.ground_rect.x0 = std::min(layout.ground_rect.x0, r.x0);
            layout.ground_rect.y0 = std::min(layout.ground_rect.y0, r.y0);
            layout.ground_rect.x1 = std::max(layout.ground_rect.x1, r.x1);
            layout.ground_rect.y1 = std::max(layout.ground_rect.y1, r.y1);
        }
    };
    for (const Rect2& r : layout.roads) grow(r);
    for (const auto& b : layout.buildings) grow(b.footprint);
    if (first) throw std::runtime_error("layout file: no roads or buildings");

    const auto violations = validate_layout(layout);
    if (!violations.empty())
        throw std::runtime_error("layout file: " + violations.front());
    return layout;
}

}  // namespace floodsynth
