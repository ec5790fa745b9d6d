// Lambert diffuse + Blinn-Phong specular, clamped to [0,1]. Roughness maps
// the specular exponent from 64 (smooth) down to 4 (rough). Water opacity is
// applied as a single blend over the nearest opaque surface.
#pragma once

#include <cmath>
#include <span>

#include "floodsynth/core/material.hpp"
#include "floodsynth/core/math.hpp"
#include "floodsynth/core/scene.hpp"

namespace floodsynth {

inline Rgb shade_surface(const MaterialParams& m, const Vec3& n,
                         std::span<const LightParams> lights, const Vec3& view_dir) {
    double ambient = 0.0;
    double diffuse = 0.0;
    double spec = 0.0;
    const double exponent = lerp(64.0, 4.0, m.roughness);
    for (const LightParams& l : lights) {
        ambient += l.ambient;
        diffuse += l.intensity * std::max(0.0, dot(n, l.direction));
        const Vec3 h = normalized(l.direction + view_dir);
        spec += l.intensity * std::pow(std::max(0.0, dot(n, h)), exponent);
    }
    Rgb out;
    for (int c = 0; c < 3; ++c)
        out[c] = clamp01((ambient + diffuse) * m.base_color[c] + m.specular * spec);
    return out;
}

inline Rgb composite_water(const Rgb& water_rgb, const Rgb& under_rgb, double opacity) {
    Rgb out;
    for (int c = 0; c < 3; ++c)
        out[c] = opacity * water_rgb[c] + (1.0 - opacity) * under_rgb[c];
    return out;
}

inline std::uint8_t quantize_channel(double v) {
    return static_cast<std::uint8_t>(std::lround(clamp01(v) * 255.0));
}

}  // namespace floodsynth
