// Counter-based seeding and a deterministic uniform sampler. Frames derive
// independent streams from (master_seed, frame_index), so any subset of
// frames can be generated in any order, or in parallel, with identical
// results. mt19937_64 is bit-exact across platforms by the standard; the
// [lo,hi] mapping is hand-rolled because std::uniform_real_distribution is
// implementation-defined.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace floodsynth {

struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t frame_index = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

// Injective in frame_index for a fixed master seed: the odd multiplier makes
// the pre-mix distinct mod 2^64 and splitmix64 is a bijection.
inline std::uint64_t derive_frame_seed(const SeedSpec& s) {
    const std::uint64_t mixed_master = detail::splitmix64(s.master_seed);
    return detail::splitmix64(mixed_master ^ (0x9e3779b97f4a7c15ULL * (s.frame_index + 1)));
}

class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of the engine output.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

inline double sample_uniform(RngStream& stream, double lo, double hi) {
    if (lo > hi) throw std::invalid_argument("sample_uniform: lo > hi");
    return lo + (hi - lo) * stream.next_unit();
}

// Uniform index in [0, count).
inline std::size_t sample_index(RngStream& stream, std::size_t count) {
    if (count == 0) throw std::invalid_argument("sample_index: empty range");
    const std::size_t i = static_cast<std::size_t>(stream.next_unit() * static_cast<double>(count));
    return i < count ? i : count - 1;
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool valid() const { return lo <= hi; }
    bool contains(double v) const { return v >= lo && v <= hi; }
};

inline double sample_uniform(RngStream& stream, const Interval& iv) {
    return sample_uniform(stream, iv.lo, iv.hi);
}

}  // namespace floodsynth
