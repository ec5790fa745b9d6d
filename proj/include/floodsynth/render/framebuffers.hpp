// Per-frame G-buffer set. depth is camera z in meters with 0 = no hit;
// instance 0 is background or ground fill; fine-grained IDs pack
// instance * 256 + part.
#pragma once

#include <cstdint>
#include <vector>

#include "floodsynth/core/math.hpp"
#include "floodsynth/core/scene.hpp"

namespace floodsynth {

struct FrameBuffers {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> color;       // W*H*3, RGB
    std::vector<float> depth;              // W*H, camera z, 0 = no hit
    std::vector<float> normal;             // W*H*3, world frame, (0,0,0) = no hit
    std::vector<std::uint16_t> instance;   // W*H
    std::vector<std::uint16_t> semantic;   // W*H, SemanticClass codes
    std::vector<std::uint16_t> fine_grained;  // W*H

    FrameBuffers() = default;
    FrameBuffers(int w, int h)
        : width(w),
          height(h),
          color(static_cast<std::size_t>(w) * h * 3, 0),
          depth(static_cast<std::size_t>(w) * h, 0.0f),
          normal(static_cast<std::size_t>(w) * h * 3, 0.0f),
          instance(static_cast<std::size_t>(w) * h, 0),
          semantic(static_cast<std::size_t>(w) * h, 0),
          fine_grained(static_cast<std::size_t>(w) * h, 0) {}

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width + x;
    }

    Vec3 normal_at(int x, int y) const {
        const std::size_t i = index(x, y) * 3;
        return {normal[i], normal[i + 1], normal[i + 2]};
    }
};

inline std::uint16_t pack_fine_grained(std::uint16_t instance_id, std::uint16_t part_index) {
    return static_cast<std::uint16_t>(instance_id * 256 + part_index);
}

// Plain 8-bit RGB raster, shared by background fills and image file I/O.
struct ImageRgb8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // W*H*3, row-major from the top

    bool valid() const {
        return width > 0 && height > 0 &&
               pixels.size() == static_cast<std::size_t>(width) * height * 3;
    }
};

}  // namespace floodsynth
