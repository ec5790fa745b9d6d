// Water surface model: a sum-of-sines height field over the ground plane.
// Component frequencies follow the deep-water dispersion relation
// omega = sqrt(g * |k|), so gravity sets the wave animation speed. Foam
// marks crests above a normalized threshold; roughness enters as a
// deterministic high-frequency perturbation of the shading normal.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "floodsynth/core/material.hpp"
#include "floodsynth/core/math.hpp"

namespace floodsynth {

struct WaveComponent {
    double amplitude = 0.0;  // meters, >= 0
    double kx = 1.0;         // wave vector, rad/m, |k| > 0
    double ky = 0.0;
    double phase = 0.0;      // radians
};

struct WaterSurfaceParams {
    double base_level = 0.0;           // world z of still water
    int level_class = 1;               // 1..4
    std::vector<WaveComponent> waves;  // first component is the main wave
    double gravity = 9.81;             // m/s^2
    double foam_threshold = 0.6;       // in (0, 1]
    double roughness_noise_amp = 0.0;  // >= 0
    MaterialParams material;
    std::optional<std::string> wavy_texture;  // image path; absent = procedural
};

inline double dispersion_omega(double k_mag, double g) {
    if (k_mag <= 0.0 || g <= 0.0)
        throw std::domain_error("dispersion_omega requires k_mag > 0 and g > 0");
    return std::sqrt(g * k_mag);
}

inline double total_wave_amplitude(const WaterSurfaceParams& w) {
    double sum = 0.0;
    for (const auto& c : w.waves) sum += c.amplitude;
    return sum;
}

namespace detail {

inline double wave_arg(const WaveComponent& c, double g, double x, double y, double t) {
    const double k_mag = std::sqrt(c.kx * c.kx + c.ky * c.ky);
    const double omega = dispersion_omega(k_mag, g);
    return c.kx * x + c.ky * y + c.phase - omega * t;
}

// Lattice hash noise in [-1, 1], smooth in all three arguments. Used for the
// roughness perturbation; has no relation to the frame RNG streams.
inline double hash_to_unit(std::uint64_t h) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline double lattice_value(std::int64_t ix, std::int64_t iy, std::int64_t iz,
                            std::uint64_t salt) {
    std::uint64_t h = salt;
    h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(ix);
    h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(iy);
    h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(iz);
    return 2.0 * hash_to_unit(h) - 1.0;
}

inline double smooth(double t) { return t * t * (3.0 - 2.0 * t); }

inline double value_noise3(double x, double y, double z, std::uint64_t salt) {
    const double fx = std::floor(x), fy = std::floor(y), fz = std::floor(z);
    const auto ix = static_cast<std::int64_t>(fx);
    const auto iy = static_cast<std::int64_t>(fy);
    const auto iz = static_cast<std::int64_t>(fz);
    const double sx = smooth(x - fx), sy = smooth(y - fy), sz = smooth(z - fz);

    double corners[2][2][2];
    for (int dz = 0; dz < 2; ++dz)
        for (int dy = 0; dy < 2; ++dy)
            for (int dx = 0; dx < 2; ++dx)
                corners[dz][dy][dx] = lattice_value(ix + dx, iy + dy, iz + dz, salt);

    const double x00 = lerp(corners[0][0][0], corners[0][0][1], sx);
    const double x10 = lerp(corners[0][1][0], corners[0][1][1], sx);
    const double x01 = lerp(corners[1][0][0], corners[1][0][1], sx);
    const double x11 = lerp(corners[1][1][0], corners[1][1][1], sx);
    return lerp(lerp(x00, x10, sy), lerp(x01, x11, sy), sz);
}

inline constexpr double kRoughnessNoiseFreq = 50.0;      // rad/m, well above wave scale
inline constexpr double kRoughnessNoiseTimeFreq = 3.0;

}  // namespace detail

inline double wave_height(const WaterSurfaceParams& w, double x, double y, double t) {
    double h = w.base_level;
    for (const auto& c : w.waves)
        h += c.amplitude * std::sin(detail::wave_arg(c, w.gravity, x, y, t));
    return h;
}

// Analytic surface gradient (dh/dx, dh/dy).
inline void wave_gradient(const WaterSurfaceParams& w, double x, double y, double t,
                          double& dhdx, double& dhdy) {
    dhdx = 0.0;
    dhdy = 0.0;
    for (const auto& c : w.waves) {
        const double cos_term = c.amplitude * std::cos(detail::wave_arg(c, w.gravity, x, y, t));
        dhdx += c.kx * cos_term;
        dhdy += c.ky * cos_term;
    }
}

inline Vec3 wave_normal(const WaterSurfaceParams& w, double x, double y, double t) {
    double dhdx = 0.0, dhdy = 0.0;
    wave_gradient(w, x, y, t, dhdx, dhdy);
    Vec3 g{-dhdx, -dhdy, 1.0};
    if (w.roughness_noise_amp > 0.0) {
        const double fx = x * detail::kRoughnessNoiseFreq;
        const double fy = y * detail::kRoughnessNoiseFreq;
        const double ft = t * detail::kRoughnessNoiseTimeFreq;
        g.x += w.roughness_noise_amp * detail::value_noise3(fx, fy, ft, 0x57415645u);
        g.y += w.roughness_noise_amp * detail::value_noise3(fx, fy, ft, 0x464f414du);
    }
    return normalized(g);
}

// Crest measure c = (h - L) / sum(A) in [-1, 1]; foam ramps from the
// threshold up to the crest. Flat water never foams.
inline double foam_mask(const WaterSurfaceParams& w, double x, double y, double t) {
    const double amp_sum = total_wave_amplitude(w);
    if (amp_sum <= 0.0) return 0.0;
    const double c = (wave_height(w, x, y, t) - w.base_level) / amp_sum;
    const double thr = w.foam_threshold;
    if (thr >= 1.0) return c >= 1.0 ? 1.0 : 0.0;
    return clamp01((c - thr) / (1.0 - thr));
}

}  // namespace floodsynth
