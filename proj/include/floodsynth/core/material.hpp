#pragma once

#include <array>
#include <optional>
#include <string>

#include "floodsynth/core/math.hpp"

namespace floodsynth {

using Rgb = std::array<double, 3>;

struct MaterialParams {
    Rgb base_color{0.7, 0.7, 0.7};
    double roughness = 0.5;   // [0,1]; 0 = tight highlight, 1 = broad
    double opacity = 1.0;     // [0,1]
    double specular = 0.0;    // [0,1] highlight strength
    std::optional<std::string> texture;  // carried for water tinting; meshes are untextured

    MaterialParams clamped() const {
        MaterialParams m = *this;
        for (double& c : m.base_color) c = clamp01(c);
        m.roughness = clamp01(m.roughness);
        m.opacity = clamp01(m.opacity);
        m.specular = clamp01(m.specular);
        return m;
    }
};

}  // namespace floodsynth
