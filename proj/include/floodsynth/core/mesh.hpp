// Triangle mesh with named part ranges, plus a Wavefront OBJ subset loader.
// Supported OBJ records: v, vn, f (triangles only), o/g (part delimiters),
// comments and blank lines. vt indices inside faces are parsed and dropped;
// s/mtllib/usemtl lines are ignored. Anything else is a parse error.
#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "floodsynth/core/math.hpp"

namespace floodsynth {

struct MeshParseError : std::runtime_error {
    MeshParseError(const std::string& what, int line)
        : std::runtime_error(what + " at line " + std::to_string(line)), line_number(line) {}
    int line_number;
};

struct MeshPart {
    std::string name;
    std::size_t first_triangle = 0;
    std::size_t triangle_count = 0;
};

struct TriangleMesh {
    std::vector<Vec3> vertices;                    // object space
    std::vector<Vec3> normals;                     // one per vertex, unit
    std::vector<std::array<std::uint32_t, 3>> triangles;
    std::vector<MeshPart> parts;                   // partition of the triangle list
    Aabb object_aabb;

    std::size_t part_of_triangle(std::size_t tri) const {
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (tri >= parts[p].first_triangle &&
                tri < parts[p].first_triangle + parts[p].triangle_count)
                return p;
        }
        return 0;
    }
};

inline Vec3 face_normal(const TriangleMesh& m, std::size_t tri) {
    const auto& t = m.triangles[tri];
    return normalized(cross(m.vertices[t[1]] - m.vertices[t[0]],
                            m.vertices[t[2]] - m.vertices[t[0]]));
}

// Area-weighted accumulation of face normals, then normalize.
inline void compute_vertex_normals(TriangleMesh& m) {
    m.normals.assign(m.vertices.size(), Vec3{});
    for (const auto& t : m.triangles) {
        const Vec3 n = cross(m.vertices[t[1]] - m.vertices[t[0]],
                             m.vertices[t[2]] - m.vertices[t[0]]);
        for (std::uint32_t vi : t) m.normals[vi] += n;
    }
    for (auto& n : m.normals) {
        const Vec3 u = normalized(n);
        n = (norm(u) > 0.0) ? u : Vec3{0.0, 0.0, 1.0};
    }
}

inline void compute_object_aabb(TriangleMesh& m) {
    if (m.vertices.empty()) {
        m.object_aabb = {};
        return;
    }
    Vec3 lo = m.vertices[0], hi = m.vertices[0];
    for (const Vec3& v : m.vertices) {
        lo = min_components(lo, v);
        hi = max_components(hi, v);
    }
    m.object_aabb = {lo, hi};
}

// Invariant check; violations are returned as data, prefixed for context.
inline std::vector<std::string> validate_mesh(const TriangleMesh& m, const std::string& label) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m.triangles.size(); ++i)
        for (std::uint32_t vi : m.triangles[i])
            if (vi >= m.vertices.size()) {
                out.push_back(label + ": triangle " + std::to_string(i) +
                              " references vertex " + std::to_string(vi) + " out of range");
                return out;
            }
    if (m.normals.size() != m.vertices.size())
        out.push_back(label + ": normal count does not match vertex count");

    std::size_t covered = 0;
    for (std::size_t p = 0; p < m.parts.size(); ++p) {
        if (m.parts[p].first_triangle != covered) {
            out.push_back(label + ": part ranges do not partition the triangle list");
            break;
        }
        covered += m.parts[p].triangle_count;
    }
    if (!m.parts.empty() && covered != m.triangles.size())
        out.push_back(label + ": part ranges do not cover all triangles");
    if (m.parts.empty() && !m.triangles.empty())
        out.push_back(label + ": mesh has no parts");
    if (m.parts.size() > 256)
        out.push_back(label + ": more than 256 parts");

    for (const Vec3& v : m.vertices)
        if (!m.object_aabb.contains(v)) {
            out.push_back(label + ": object_aabb does not contain all vertices");
            break;
        }
    return out;
}

namespace detail {

inline bool parse_double3(std::istringstream& ss, Vec3& out) {
    return static_cast<bool>(ss >> out.x >> out.y >> out.z);
}

// "7", "7/2", "7//3", "7/2/3" -> vertex index 7, normal index 3 (0 = none).
inline bool parse_face_corner(const std::string& token, long& v_idx, long& n_idx) {
    v_idx = 0;
    n_idx = 0;
    const auto first = token.find('/');
    try {
        if (first == std::string::npos) {
            v_idx = std::stol(token);
            return true;
        }
        v_idx = std::stol(token.substr(0, first));
        const auto second = token.find('/', first + 1);
        if (second == std::string::npos) return true;  // v/vt
        const std::string n = token.substr(second + 1);
        if (!n.empty()) n_idx = std::stol(n);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace detail

inline TriangleMesh load_mesh_obj(std::istream& in) {
    TriangleMesh mesh;
    std::vector<Vec3> vn_records;
    // Normal index per vertex as assigned by f v//vn corners (0 = unassigned).
    std::vector<long> vertex_normal_idx;
    std::string current_part = "default";
    bool part_open = false;

    auto close_part = [&](std::size_t next_first) {
        if (!mesh.parts.empty()) {
            MeshPart& last = mesh.parts.back();
            last.triangle_count = next_first - last.first_triangle;
            if (last.triangle_count == 0) mesh.parts.pop_back();
        }
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();  // CRLF
        std::istringstream ss(line);
        std::string keyword;
        if (!(ss >> keyword) || keyword[0] == '#') continue;

        if (keyword == "v") {
            Vec3 v;
            if (!detail::parse_double3(ss, v))
                throw MeshParseError("malformed vertex", line_no);
            mesh.vertices.push_back(v);
            vertex_normal_idx.push_back(0);
        } else if (keyword == "vn") {
            Vec3 n;
            if (!detail::parse_double3(ss, n))
                throw MeshParseError("malformed normal", line_no);
            vn_records.push_back(normalized(n));
        } else if (keyword == "f") {
            std::vector<std::pair<long, long>> corners;
            std::string token;
            while (ss >> token) {
                long v = 0, n = 0;
                if (!detail::parse_face_corner(token, v, n))
                    throw MeshParseError("malformed face corner '" + token + "'", line_no);
                corners.emplace_back(v, n);
            }
            if (corners.size() != 3)
                throw MeshParseError("non-triangle face", line_no);

            std::array<std::uint32_t, 3> tri{};
            for (std::size_t i = 0; i < 3; ++i) {
                const long v = corners[i].first;
                if (v < 1 || static_cast<std::size_t>(v) > mesh.vertices.size())
                    throw MeshParseError("vertex index out of range", line_no);
                const long n = corners[i].second;
                if (n < 0 || static_cast<std::size_t>(n) > vn_records.size())
                    throw MeshParseError("normal index out of range", line_no);
                tri[i] = static_cast<std::uint32_t>(v - 1);
                if (n > 0) vertex_normal_idx[tri[i]] = n;
            }
            if (!part_open) {
                close_part(mesh.triangles.size());
                mesh.parts.push_back({current_part, mesh.triangles.size(), 0});
                part_open = true;
            }
            mesh.triangles.push_back(tri);
        } else if (keyword == "o" || keyword == "g") {
            std::string name;
            ss >> name;
            current_part = name.empty() ? "default" : name;
            part_open = false;
        } else if (keyword == "s" || keyword == "mtllib" || keyword == "usemtl" ||
                   keyword == "vt") {
            continue;
        } else {
            throw MeshParseError("unsupported record '" + keyword + "'", line_no);
        }
    }

    if (mesh.triangles.empty()) throw MeshParseError("empty mesh", line_no);
    close_part(mesh.triangles.size());
    if (mesh.parts.empty()) mesh.parts.push_back({"default", 0, mesh.triangles.size()});
    mesh.parts.back().triangle_count = mesh.triangles.size() - mesh.parts.back().first_triangle;

    // Take file normals where faces referenced them, fill the rest from geometry.
    TriangleMesh tmp = mesh;
    compute_vertex_normals(tmp);
    mesh.normals.resize(mesh.vertices.size());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const long n = vertex_normal_idx[i];
        mesh.normals[i] = (n > 0) ? vn_records[static_cast<std::size_t>(n - 1)] : tmp.normals[i];
    }
    compute_object_aabb(mesh);
    return mesh;
}

// Axis-aligned box with unshared per-face vertices so each face keeps an
// exact flat normal. 24 vertices, 12 triangles, one part.
inline TriangleMesh make_box_mesh(const Vec3& lo, const Vec3& hi,
                                  const std::string& part_name = "box") {
    TriangleMesh m;
    const auto add_face = [&](const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d,
                              const Vec3& n) {
        const std::uint32_t base = static_cast<std::uint32_t>(m.vertices.size());
        for (const Vec3& v : {a, b, c, d}) {
            m.vertices.push_back(v);
            m.normals.push_back(n);
        }
        m.triangles.push_back({base, base + 1, base + 2});
        m.triangles.push_back({base, base + 2, base + 3});
    };

    const Vec3& l = lo;
    const Vec3& h = hi;
    add_face({l.x, l.y, l.z}, {l.x, h.y, l.z}, {h.x, h.y, l.z}, {h.x, l.y, l.z}, {0, 0, -1});
    add_face({l.x, l.y, h.z}, {h.x, l.y, h.z}, {h.x, h.y, h.z}, {l.x, h.y, h.z}, {0, 0, 1});
    add_face({l.x, l.y, l.z}, {h.x, l.y, l.z}, {h.x, l.y, h.z}, {l.x, l.y, h.z}, {0, -1, 0});
    add_face({l.x, h.y, l.z}, {l.x, h.y, h.z}, {h.x, h.y, h.z}, {h.x, h.y, l.z}, {0, 1, 0});
    add_face({l.x, l.y, l.z}, {l.x, l.y, h.z}, {l.x, h.y, h.z}, {l.x, h.y, l.z}, {-1, 0, 0});
    add_face({h.x, l.y, l.z}, {h.x, h.y, l.z}, {h.x, h.y, h.z}, {h.x, l.y, h.z}, {1, 0, 0});

    m.parts.push_back({part_name, 0, m.triangles.size()});
    compute_object_aabb(m);
    return m;
}

// Append `box` to `dst` as a new named part.
inline void append_box_part(TriangleMesh& dst, const Vec3& lo, const Vec3& hi,
                            const std::string& part_name) {
    const TriangleMesh box = make_box_mesh(lo, hi, part_name);
    const std::uint32_t base = static_cast<std::uint32_t>(dst.vertices.size());
    const std::size_t tri_base = dst.triangles.size();
    dst.vertices.insert(dst.vertices.end(), box.vertices.begin(), box.vertices.end());
    dst.normals.insert(dst.normals.end(), box.normals.begin(), box.normals.end());
    for (const auto& t : box.triangles)
        dst.triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
    dst.parts.push_back({part_name, tri_base, box.triangles.size()});
    compute_object_aabb(dst);
}

}  // namespace floodsynth
