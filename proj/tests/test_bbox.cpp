#include <catch2/catch_amalgamated.hpp>

#include <floodsynth/annotate/bbox.hpp>
#include <floodsynth/core/mesh.hpp>

#include <algorithm>
#include <memory>
#include <random>

using namespace floodsynth;

TEST_CASE("bbox2d of a single marked pixel is that pixel") {
    std::vector<std::uint16_t> mask(16 * 16, 0);
    mask[7 * 16 + 5] = 9; // pixel (5, 7)
    const auto box = bbox2d_from_instance_mask(mask, 16, 16, 9, 1);
    REQUIRE(box);
    CHECK(box->x0 == 5);
    CHECK(box->y0 == 7);
    CHECK(box->x1 == 5);
    CHECK(box->y1 == 7);
    CHECK(box->pixel_width() == 1);
    CHECK(box->pixel_height() == 1);
    CHECK(box->instance_id == 9);
}

TEST_CASE("bbox2d respects the min_pixels floor") {
    std::vector<std::uint16_t> mask(16 * 16, 0);
    for (int i = 0; i < 10; ++i) mask[static_cast<std::size_t>(i)] = 3;
    CHECK(bbox2d_from_instance_mask(mask, 16, 16, 3, 10).has_value());
    CHECK_FALSE(bbox2d_from_instance_mask(mask, 16, 16, 3, 11).has_value());
    // Absent instance: no box even with floor 0.
    CHECK_FALSE(bbox2d_from_instance_mask(mask, 16, 16, 77, 0).has_value());
}

TEST_CASE("bbox2d bounds are tight against a scan oracle") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> coord(0, 31);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint16_t> mask(32 * 32, 0);
        int ex0 = 32, ey0 = 32, ex1 = -1, ey1 = -1;
        const int pixels = 1 + trial % 40;
        for (int i = 0; i < pixels; ++i) {
            const int x = coord(rng), y = coord(rng);
            mask[static_cast<std::size_t>(y) * 32 + x] = 5;
            ex0 = std::min(ex0, x);
            ey0 = std::min(ey0, y);
            ex1 = std::max(ex1, x);
            ey1 = std::max(ey1, y);
        }
        const auto box = bbox2d_from_instance_mask(mask, 32, 32, 5, 1);
        REQUIRE(box);
        CHECK(box->x0 == ex0);
        CHECK(box->y0 == ey0);
        CHECK(box->x1 == ex1);
        CHECK(box->y1 == ey1);
    }
}

TEST_CASE("bbox3d of a unit cube at the origin") {
    ObjectInstance inst;
    inst.instance_id = 2;
    inst.mesh = std::make_shared<TriangleMesh>(
        make_box_mesh(Vec3{-0.5, -0.5, -0.5}, Vec3{0.5, 0.5, 0.5}));
    const CameraModel cam = make_camera(64, 64, 60.0, Vec3{0, -5, 0}, Vec3{0, 0, 0});

    const BBox3D box = bbox3d_of_instance(inst, cam);
    CHECK(box.instance_id == 2);
    CHECK(norm(box.center) < 1e-12);
    CHECK(norm(box.extents - Vec3{1, 1, 1}) < 1e-12);
    CHECK(box.yaw == Catch::Approx(0.0).margin(1e-12));
    for (const Vec3& c : box.corners_world) {
        CHECK(std::abs(c.x) == Catch::Approx(0.5));
        CHECK(std::abs(c.y) == Catch::Approx(0.5));
        CHECK(std::abs(c.z) == Catch::Approx(0.5));
    }
}

TEST_CASE("bbox3d translation moves center and corners together") {
    ObjectInstance inst;
    inst.instance_id = 4;
    inst.mesh = std::make_shared<TriangleMesh>(
        make_box_mesh(Vec3{-0.5, -0.5, -0.5}, Vec3{0.5, 0.5, 0.5}));
    inst.pose.translation = Vec3{10.0, 0.0, 0.0};
    const CameraModel cam = make_camera(64, 64, 60.0, Vec3{0, -5, 0}, Vec3{0, 0, 0});

    const BBox3D box = bbox3d_of_instance(inst, cam);
    CHECK(norm(box.center - Vec3{10, 0, 0}) < 1e-12);
    for (const Vec3& c : box.corners_world) {
        CHECK(c.x >= 9.5 - 1e-12);
        CHECK(c.x <= 10.5 + 1e-12);
    }
    // Extents are pose-independent.
    CHECK(norm(box.extents - Vec3{1, 1, 1}) < 1e-12);
}

TEST_CASE("bbox3d recovers yaw and matches the eight-corner oracle") {
    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> yaw_d(-kPi, kPi);
    std::uniform_real_distribution<double> off(-4.0, 4.0);
    const CameraModel cam = make_camera(64, 64, 60.0, Vec3{0, -15, 6}, Vec3{0, 0, 0});

    for (int trial = 0; trial < 50; ++trial) {
        ObjectInstance inst;
        inst.instance_id = 1;
        inst.mesh = std::make_shared<TriangleMesh>(
            make_box_mesh(Vec3{-2.2, -0.9, 0.0}, Vec3{2.2, 0.9, 1.5}));
        const double yaw = yaw_d(rng);
        inst.pose.rotation = rotation_z(yaw);
        inst.pose.translation = Vec3{off(rng), off(rng), 0.0};

        const BBox3D box = bbox3d_of_instance(inst, cam);
        CHECK(box.yaw == Catch::Approx(yaw).margin(1e-12));

        // Oracle: push each object-space corner through the pose and the
        // camera by hand.
        const auto corners = inst.mesh->object_aabb.corners();
        for (std::size_t i = 0; i < 8; ++i) {
            const Vec3 world = inst.pose.rotation * corners[i] + inst.pose.translation;
            CHECK(norm(box.corners_world[i] - world) < 1e-12);
            const Vec3 cam_space = cam.extrinsics.rotation * world + cam.extrinsics.translation;
            CHECK(norm(box.corners_camera[i] - cam_space) < 1e-9);
        }
    }
}
