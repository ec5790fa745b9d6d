#include <catch2/catch_amalgamated.hpp>

#include <floodsynth/core/mesh.hpp>

#include <sstream>
#include <string>

using namespace floodsynth;

namespace {

TriangleMesh load_from_string(const std::string& text) {
    std::istringstream in(text);
    return load_mesh_obj(in);
}

} // namespace

TEST_CASE("load_mesh_obj parses a single triangle") {
    const TriangleMesh m = load_from_string(
        "v 0 0 0\n"
        "v 1 0 0\n"
        "v 0 1 0\n"
        "f 1 2 3\n");
    REQUIRE(m.vertices.size() == 3);
    REQUIRE(m.triangles.size() == 1);
    REQUIRE(m.parts.size() == 1);
    CHECK(m.parts[0].triangle_count == 1);
    CHECK(validate_mesh(m, "tri").empty());

    // Geometry normals point +z for this winding.
    const Vec3 n = face_normal(m, 0);
    CHECK(n.z == Catch::Approx(1.0));
}

TEST_CASE("load_mesh_obj parses a cube with 12 faces and unit bounds") {
    // Classic unit cube with v//vn corners split over two named groups.
    const std::string cube =
        "# unit cube\n"
        "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\n"
        "v 0 0 1\nv 1 0 1\nv 1 1 1\nv 0 1 1\n"
        "vn 0 0 -1\nvn 0 0 1\n"
        "g bottom\n"
        "f 1//1 3//1 2//1\nf 1//1 4//1 3//1\n"
        "g top\n"
        "f 5//2 6//2 7//2\nf 5//2 7//2 8//2\n"
        "g sides\n"
        "f 1 2 6\nf 1 6 5\n"
        "f 2 3 7\nf 2 7 6\n"
        "f 3 4 8\nf 3 8 7\n"
        "f 4 1 5\nf 4 5 8\n";
    const TriangleMesh m = load_from_string(cube);
    CHECK(m.vertices.size() == 8);
    CHECK(m.triangles.size() == 12);
    CHECK(norm(m.object_aabb.min - Vec3{0, 0, 0}) < 1e-12);
    CHECK(norm(m.object_aabb.max - Vec3{1, 1, 1}) < 1e-12);
    CHECK(validate_mesh(m, "cube").empty());

    // Named groups appear as parts in declaration order.
    REQUIRE(m.parts.size() == 3);
    CHECK(m.parts[0].name == "bottom");
    CHECK(m.parts[0].triangle_count == 2);
    CHECK(m.parts[1].name == "top");
    CHECK(m.part_of_triangle(0) == 0);
    CHECK(m.part_of_triangle(2) == 1);
    CHECK(m.part_of_triangle(11) == 2);
}

TEST_CASE("load_mesh_obj rejects quad faces with the offending line number") {
    const std::string quad =
        "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\n"
        "f 1 2 3 4\n";
    try {
        load_from_string(quad);
        FAIL("expected MeshParseError");
    } catch (const MeshParseError& e) {
        CHECK(e.line_number == 5);
        CHECK(std::string(e.what()).find("non-triangle face") != std::string::npos);
        CHECK(std::string(e.what()).find("line 5") != std::string::npos);
    }
}

TEST_CASE("load_mesh_obj rejects out-of-range and malformed records") {
    CHECK_THROWS_AS(load_from_string("v 0 0 0\nf 1 2 3\n"), MeshParseError);
    CHECK_THROWS_AS(load_from_string("v 0 0\n"), MeshParseError);
    CHECK_THROWS_AS(load_from_string("splineseg 1 2\n"), MeshParseError);
    CHECK_THROWS_AS(load_from_string("# nothing but comments\n"), MeshParseError);
}

TEST_CASE("load_mesh_obj honors file normals and fills missing ones") {
    const TriangleMesh m = load_from_string(
        "v 0 0 0\nv 1 0 0\nv 0 1 0\n"
        "vn 0 0 -1\n"
        "f 1//1 2//1 3\n");
    REQUIRE(m.normals.size() == 3);
    CHECK(m.normals[0].z == Catch::Approx(-1.0)); // taken from the vn record
    CHECK(m.normals[2].z == Catch::Approx(1.0));  // derived from geometry
}

TEST_CASE("make_box_mesh produces a closed box with flat face normals") {
    const TriangleMesh m = make_box_mesh(Vec3{-0.5, -0.5, 0.0}, Vec3{0.5, 0.5, 1.0}, "shell");
    CHECK(m.vertices.size() == 24);
    CHECK(m.triangles.size() == 12);
    REQUIRE(m.parts.size() == 1);
    CHECK(m.parts[0].name == "shell");
    CHECK(validate_mesh(m, "box").empty());
    CHECK(norm(m.object_aabb.min - Vec3{-0.5, -0.5, 0.0}) < 1e-12);
    CHECK(norm(m.object_aabb.max - Vec3{0.5, 0.5, 1.0}) < 1e-12);

    // Every face normal is axis-aligned and agrees with its vertex normals.
    for (std::size_t t = 0; t < m.triangles.size(); ++t) {
        const Vec3 fn = face_normal(m, t);
        CHECK(std::abs(fn.x) + std::abs(fn.y) + std::abs(fn.z) == Catch::Approx(1.0));
        for (std::uint32_t vi : m.triangles[t]) CHECK(norm(m.normals[vi] - fn) < 1e-12);
    }
}

TEST_CASE("append_box_part extends the part table and the bounds") {
    TriangleMesh m = make_box_mesh(Vec3{0, 0, 0}, Vec3{1, 1, 1}, "body");
    append_box_part(m, Vec3{0.2, 0.2, 1.0}, Vec3{0.8, 0.8, 1.4}, "cabin");
    REQUIRE(m.parts.size() == 2);
    CHECK(m.parts[1].name == "cabin");
    CHECK(m.parts[1].first_triangle == 12);
    CHECK(m.parts[1].triangle_count == 12);
    CHECK(m.triangles.size() == 24);
    CHECK(m.object_aabb.max.z == Catch::Approx(1.4));
    CHECK(validate_mesh(m, "car").empty());
    CHECK(m.part_of_triangle(13) == 1);
}

TEST_CASE("validate_mesh reports broken invariants") {
    TriangleMesh m = make_box_mesh(Vec3{0, 0, 0}, Vec3{1, 1, 1});
    m.triangles[0][0] = 999;
    const auto v = validate_mesh(m, "bad");
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].find("out of range") != std::string::npos);

    TriangleMesh gap = make_box_mesh(Vec3{0, 0, 0}, Vec3{1, 1, 1});
    gap.parts[0].triangle_count = 5; // no longer covers all 12 triangles
    const auto g = validate_mesh(gap, "gap");
    REQUIRE_FALSE(g.empty());
}
