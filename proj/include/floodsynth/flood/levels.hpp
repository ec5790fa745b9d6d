// Flood-level labeling: levels 0..4 where 0 is dry and 1..4 are bands of the
// submersion ratio (fraction of a vehicle's vertical extent under still
// water). Water heights for a requested level sit at the band midpoint of a
// canonical vehicle of reference_height.
#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "floodsynth/core/math.hpp"

namespace floodsynth {

struct FloodLevelTable {
    // Submersion-ratio cut points, 0 < t1 < t2 < t3 < 1.
    std::array<double, 3> thresholds{0.25, 0.5, 0.75};
    double reference_height = 1.5;  // canonical car height, meters

    bool valid() const {
        const auto& t = thresholds;
        return 0.0 < t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < 1.0 &&
               reference_height > 0.0;
    }

    // Closed upper bound of the submersion band for a level; lower bound is
    // the previous threshold (0 for level 1).
    double band_lo(int level) const { return level <= 1 ? 0.0 : thresholds[level - 2]; }
    double band_hi(int level) const { return level >= 4 ? 1.0 : thresholds[level - 1]; }
};

struct WaterLevelResult {
    double base_level = 0.0;  // world z
    bool clamped = false;     // jitter escaped the band and was pulled back
};

// Band lower bounds are open for levels 2..4; nudge clamped values inside.
inline constexpr double kBandEpsilon = 1e-9;

inline WaterLevelResult level_to_water_height(int level_class, const FloodLevelTable& table,
                                              double jitter, double ground_height = 0.0) {
    if (level_class < 1 || level_class > 4)
        throw std::domain_error("flood level must be in 1..4, got " +
                                std::to_string(level_class));
    if (!table.valid()) throw std::domain_error("invalid flood level table");

    const double lo = table.band_lo(level_class);
    const double hi = table.band_hi(level_class);
    const double mid = 0.5 * (lo + hi);

    double ratio = mid + jitter / table.reference_height;
    WaterLevelResult out;
    const double ratio_lo = level_class == 1 ? lo : lo + kBandEpsilon;
    if (ratio < ratio_lo || ratio > hi) {
        ratio = std::clamp(ratio, ratio_lo, hi);
        out.clamped = true;
    }
    out.base_level = ground_height + ratio * table.reference_height;
    return out;
}

// Fraction of the box's vertical extent below still water, clamped to [0,1].
inline double submersion_ratio(const Aabb& vehicle_aabb_world, double base_level) {
    const double height = vehicle_aabb_world.max.z - vehicle_aabb_world.min.z;
    if (height <= 0.0) throw std::domain_error("degenerate vehicle AABB (zero height)");
    return clamp01((base_level - vehicle_aabb_world.min.z) / height);
}

inline int flood_level_label(bool flooded, double r, const FloodLevelTable& table) {
    if (r < 0.0 || r > 1.0)
        throw std::domain_error("submersion ratio outside [0,1]");
    if (!flooded) return 0;
    const auto& t = table.thresholds;
    if (r <= t[0]) return 1;
    if (r <= t[1]) return 2;
    if (r <= t[2]) return 3;
    return 4;
}

}  // namespace floodsynth
