// Geometric primitives shared by every module: vectors, rotation matrices,
// rigid transforms, axis-aligned boxes. World frame is z-up, right-handed.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace floodsynth {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }
inline double lerp(double a, double b, double t) { return a + (b - a) * t; }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    return n > 0.0 ? v / n : Vec3{0.0, 0.0, 0.0};
}

inline Vec3 min_components(const Vec3& a, const Vec3& b) {
    return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
}

inline Vec3 max_components(const Vec3& a, const Vec3& b) {
    return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
}

// Row-major 3x3 matrix. Only used for rotations here.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    static Mat3 identity() { return Mat3{}; }

    double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
    double& operator()(std::size_t r, std::size_t c) { return m[r][c]; }

    Mat3 transposed() const {
        Mat3 t;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) t.m[c][r] = m[r][c];
        return t;
    }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
            a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
            a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}

inline double determinant(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

inline Mat3 rotation_x(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r.m = {{{1, 0, 0}, {0, c, -s}, {0, s, c}}};
    return r;
}

inline Mat3 rotation_y(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r.m = {{{c, 0, s}, {0, 1, 0}, {-s, 0, c}}};
    return r;
}

inline Mat3 rotation_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r.m = {{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}};
    return r;
}

// Max |(R^T R - I)_ij|, used by validation code everywhere a rotation enters.
inline double orthonormality_error(const Mat3& r) {
    const Mat3 should_be_identity = r.transposed() * r;
    double err = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            err = std::max(err, std::abs(should_be_identity(i, j) - target));
        }
    return err;
}

inline bool is_rotation(const Mat3& r, double tol = 1e-9) {
    return orthonormality_error(r) <= tol && std::abs(determinant(r) - 1.0) <= tol;
}

// Rigid body transform: p' = R p + t.
struct RigidTransform {
    Mat3 rotation;
    Vec3 translation;

    static RigidTransform identity() { return RigidTransform{}; }

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

    RigidTransform inverse() const {
        const Mat3 rt = rotation.transposed();
        return {rt, -(rt * translation)};
    }
};

// Result applies b first, then a.
inline RigidTransform compose_transform(const RigidTransform& a, const RigidTransform& b) {
    return {a.rotation * b.rotation, a.rotation * b.translation + a.translation};
}

struct Aabb {
    Vec3 min;
    Vec3 max;

    Vec3 center() const { return (min + max) * 0.5; }
    Vec3 extents() const { return max - min; }

    bool contains(const Vec3& p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y &&
               p.z >= min.z && p.z <= max.z;
    }

    std::array<Vec3, 8> corners() const {
        std::array<Vec3, 8> c;
        std::size_t i = 0;
        for (double cz : {min.z, max.z})
            for (double cy : {min.y, max.y})
                for (double cx : {min.x, max.x}) c[i++] = {cx, cy, cz};
        return c;
    }
};

// Componentwise min/max over the 8 transformed corners.
inline Aabb transform_aabb(const Aabb& box, const RigidTransform& t) {
    const auto corners = box.corners();
    Vec3 lo = t.apply(corners[0]);
    Vec3 hi = lo;
    for (std::size_t i = 1; i < corners.size(); ++i) {
        const Vec3 p = t.apply(corners[i]);
        lo = min_components(lo, p);
        hi = max_components(hi, p);
    }
    return {lo, hi};
}

// Axis-aligned rectangle in the world xy plane (layout footprints, roads,
// spawn zones).
struct Rect2 {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
    double center_x() const { return 0.5 * (x0 + x1); }
    double center_y() const { return 0.5 * (y0 + y1); }

    bool contains(double x, double y) const {
        return x >= x0 && x <= x1 && y >= y0 && y <= y1;
    }

    bool contains(const Rect2& o) const {
        return o.x0 >= x0 && o.x1 <= x1 && o.y0 >= y0 && o.y1 <= y1;
    }

    // Positive-area overlap; touching edges do not count.
    bool overlaps(const Rect2& o) const {
        return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1;
    }

    Rect2 inset(double d) const { return {x0 + d, y0 + d, x1 - d, y1 - d}; }

    bool valid() const { return x1 > x0 && y1 > y0; }
};

}  // namespace floodsynth
