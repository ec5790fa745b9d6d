#include <catch2/catch_amalgamated.hpp>

#include <floodsynth/procgen/assets.hpp>
#include <floodsynth/procgen/placement.hpp>
#include <floodsynth/render/rasterizer.hpp>
#include <floodsynth/render/raycast.hpp>

#include <cmath>
#include <memory>

using namespace floodsynth;

namespace {

ComposedScene empty_scene(int w, int h) {
    ComposedScene s;
    s.camera = make_camera(w, h, 60.0, Vec3{0, -10, 5}, Vec3{0, 0, 0});
    return s;
}

// Identity-extrinsics camera: camera space == world space, looking down +z.
CameraModel axis_camera(int w, int h) {
    CameraModel cam;
    cam.fx = 50.0;
    cam.fy = 50.0;
    cam.cx = w / 2.0;
    cam.cy = h / 2.0;
    cam.width = w;
    cam.height = h;
    return cam;
}

std::shared_ptr<TriangleMesh> full_frame_triangle(double z) {
    auto mesh = std::make_shared<TriangleMesh>();
    mesh->vertices = {Vec3{-100.0, -100.0, z}, Vec3{100.0, -100.0, z}, Vec3{0.0, 200.0, z}};
    mesh->normals = {Vec3{0, 0, -1}, Vec3{0, 0, -1}, Vec3{0, 0, -1}};
    mesh->triangles = {{0, 1, 2}};
    mesh->parts = {{"face", 0, 1}};
    compute_object_aabb(*mesh);
    return mesh;
}

// Fully randomized urban scene: buildings, cars, leveled water, randomized
// camera/light. This is the scene family the oracle comparison runs on.
ComposedScene urban_scene(std::uint64_t seed, int size) {
    RngStream stream(derive_frame_seed(SeedSpec{seed, 17}));

    LayoutParams lp;
    lp.blocks_x = 2;
    lp.blocks_y = 2;
    lp.buildings_per_block = 1;
    const UrbanLayout layout = generate_layout(lp, stream);

    ComposedScene s;
    s.ground_height = layout.ground_height;
    s.ground_rect = layout.ground_rect;

    std::uint16_t next_id = 1;
    for (const auto& b : layout.buildings) {
        ObjectInstance inst;
        inst.instance_id = next_id++;
        inst.semantic_class = SemanticClass::building;
        inst.mesh = std::make_shared<TriangleMesh>(
            make_box_mesh(Vec3{b.footprint.x0, b.footprint.y0, layout.ground_height},
                          Vec3{b.footprint.x1, b.footprint.y1, layout.ground_height + b.height},
                          "shell"));
        inst.material = MaterialParams{.base_color = {0.55, 0.53, 0.5}, .roughness = 0.85,
                                       .opacity = 1.0, .specular = 0.02};
        s.instances.push_back(inst);
    }

    const AssetCatalog catalog = make_default_catalog();
    const RandomizationRanges ranges;
    auto placed = place_objects(layout, catalog, ranges, 3, stream, next_id);
    for (auto& inst : placed.instances) s.instances.push_back(std::move(inst));

    s.lights.push_back(LightParams{normalized(Vec3{0.5, 0.2, 0.84}), 1.0, 0.2});
    s.camera = make_camera(size, size, 60.0, Vec3{0, -30, 14}, Vec3{0, 0, 0});

    WaterSurfaceParams water;
    water.level_class = 2;
    water.waves.push_back(WaveComponent{0.05, 0.9, 0.25, 0.0});
    water.waves.push_back(WaveComponent{0.02, -0.35, 1.2, 1.7});
    water.material = MaterialParams{.base_color = {0.16, 0.30, 0.42}, .roughness = 0.25,
                                    .opacity = 0.65, .specular = 0.6};
    water.roughness_noise_amp = 0.15;
    water.base_level = level_to_water_height(2, FloodLevelTable{}, 0.0,
                                             layout.ground_height).base_level;
    s.water = water;
    s.time = sample_uniform(stream, 0.0, 1000.0);

    return randomize_scene(s, ranges, stream, FloodLevelTable{});
}

} // namespace

TEST_CASE("render_frame of an empty scene is pure background") {
    const ComposedScene s = empty_scene(16, 16);
    const FrameBuffers fb = render_frame(s, 16, 16);

    // Default background {0.55, 0.65, 0.8} quantized.
    const std::uint8_t r = quantize_channel(0.55);
    const std::uint8_t g = quantize_channel(0.65);
    const std::uint8_t b = quantize_channel(0.8);
    for (std::size_t i = 0; i < fb.depth.size(); ++i) {
        CHECK(fb.color[3 * i + 0] == r);
        CHECK(fb.color[3 * i + 1] == g);
        CHECK(fb.color[3 * i + 2] == b);
        CHECK(fb.depth[i] == 0.0f); // 0.0 marks "no hit"
        CHECK(fb.instance[i] == 0);
        CHECK(fb.semantic[i] == 0);
        CHECK(fb.fine_grained[i] == 0);
        CHECK(fb.normal[3 * i + 0] == 0.0f);
        CHECK(fb.normal[3 * i + 1] == 0.0f);
        CHECK(fb.normal[3 * i + 2] == 0.0f);
    }
}

TEST_CASE("render_frame fills the frame with a spanning triangle at z = 2") {
    ComposedScene s;
    s.camera = axis_camera(32, 32);
    ObjectInstance inst;
    inst.instance_id = 1;
    inst.semantic_class = SemanticClass::car;
    inst.mesh = full_frame_triangle(2.0);
    s.instances.push_back(inst);
    s.lights.push_back(LightParams{Vec3{0, 0, -1}, 1.0, 0.3});

    const FrameBuffers fb = render_frame(s, 32, 32);
    for (std::size_t i = 0; i < fb.depth.size(); ++i) {
        CHECK(fb.depth[i] == Catch::Approx(2.0).epsilon(1e-6));
        CHECK(fb.instance[i] == 1);
        CHECK(fb.semantic[i] == static_cast<std::uint16_t>(SemanticClass::car));
        CHECK(fb.fine_grained[i] == 1 * 256 + 0);
        // Shaded facing normal comes through the normal buffer.
        CHECK(fb.normal[3 * i + 2] == Catch::Approx(-1.0));
    }
}

TEST_CASE("render_frame rejects bad arguments") {
    const ComposedScene s = empty_scene(16, 16);
    CHECK_THROWS_AS(render_frame(s, 0, 16), std::invalid_argument);
    CHECK_THROWS_AS(render_frame(s, 16, 8), std::invalid_argument); // camera says 16x16

    ComposedScene invalid = empty_scene(16, 16);
    ObjectInstance broken;
    broken.instance_id = 0; // invalid id
    broken.mesh = full_frame_triangle(2.0);
    invalid.instances.push_back(broken);
    CHECK_THROWS_WITH(render_frame(invalid, 16, 16),
                      Catch::Matchers::ContainsSubstring("invalid scene"));
}

TEST_CASE("render_frame stretches a background image by nearest sampling") {
    ComposedScene s = empty_scene(4, 2);
    RenderOptions options;
    ImageRgb8 img;
    img.width = 2;
    img.height = 1;
    img.pixels = {255, 0, 0, 0, 0, 255}; // red | blue
    options.background_image = img;

    const FrameBuffers fb = render_frame(s, 4, 2, options);
    for (int y = 0; y < 2; ++y) {
        for (int x = 0; x < 4; ++x) {
            const std::size_t i = fb.index(x, y);
            CHECK(fb.depth[i] == 0.0f);
            if (x < 2) {
                CHECK(fb.color[3 * i + 0] == 255);
                CHECK(fb.color[3 * i + 2] == 0);
            } else {
                CHECK(fb.color[3 * i + 0] == 0);
                CHECK(fb.color[3 * i + 2] == 255);
            }
        }
    }
}

TEST_CASE("ground pixels carry the exact up normal") {
    ComposedScene s = urban_scene(5, 32);
    s.water.reset(); // dry variant: water would occlude every ground pixel
    const FrameBuffers fb = render_frame(s, 32, 32);
    int ground_pixels = 0;
    for (std::size_t i = 0; i < fb.depth.size(); ++i) {
        if (fb.semantic[i] != static_cast<std::uint16_t>(SemanticClass::ground)) continue;
        ++ground_pixels;
        CHECK(fb.normal[3 * i + 0] == 0.0f);
        CHECK(fb.normal[3 * i + 1] == 0.0f);
        CHECK(fb.normal[3 * i + 2] == 1.0f);
    }
    CHECK(ground_pixels > 0);
}

TEST_CASE("semantic buffer reconstructs exactly from the instance buffer") {
    const ComposedScene s = urban_scene(6, 32);
    const FrameBuffers fb = render_frame(s, 32, 32);
    int mismatches = 0;
    for (std::size_t i = 0; i < fb.depth.size(); ++i) {
        std::uint16_t expected;
        if (fb.instance[i] == 0) {
            // Instance 0 is both background and ground; depth disambiguates.
            expected = fb.depth[i] > 0.0f
                           ? static_cast<std::uint16_t>(SemanticClass::ground)
                           : static_cast<std::uint16_t>(SemanticClass::other);
        } else {
            expected = static_cast<std::uint16_t>(
                semantic_code_for(s, fb.instance[i]));
        }
        if (fb.semantic[i] != expected) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("fine-grained ids refine the instance buffer") {
    const ComposedScene s = urban_scene(7, 32);
    const FrameBuffers fb = render_frame(s, 32, 32);
    int violations = 0;
    for (std::size_t i = 0; i < fb.depth.size(); ++i) {
        if (fb.fine_grained[i] == 0) {
            if (fb.instance[i] != 0) ++violations;
        } else if (fb.fine_grained[i] / 256 != fb.instance[i]) {
            ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("rendering the same scene twice is byte-identical") {
    const ComposedScene s = urban_scene(8, 32);
    const FrameBuffers a = render_frame(s, 32, 32);
    const FrameBuffers b = render_frame(s, 32, 32);
    CHECK(a.color == b.color);
    CHECK(a.depth == b.depth);
    CHECK(a.normal == b.normal);
    CHECK(a.instance == b.instance);
    CHECK(a.semantic == b.semantic);
    CHECK(a.fine_grained == b.fine_grained);
}

TEST_CASE("flooded scenes produce water pixels below the camera") {
    const ComposedScene s = urban_scene(9, 32);
    const FrameBuffers fb = render_frame(s, 32, 32);
    int water_pixels = 0;
    for (std::size_t i = 0; i < fb.depth.size(); ++i) {
        if (fb.instance[i] != kWaterInstanceId) continue;
        ++water_pixels;
        CHECK(fb.semantic[i] == static_cast<std::uint16_t>(SemanticClass::flood));
        CHECK(fb.depth[i] > 0.0f);
    }
    CHECK(water_pixels > 0);
}

TEST_CASE("rasterizer agrees with the ray-cast oracle on urban scenes") {
    long long total = 0;
    long long agree = 0;
    long long depth_bad = 0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const ComposedScene s = urban_scene(100 + seed, 32);
        const FrameBuffers fb = render_frame(s, 32, 32);
        const std::vector<HitRecord> hits = raycast_reference(s);

        for (std::size_t i = 0; i < hits.size(); ++i) {
            ++total;
            const std::uint16_t oracle_id = hits[i].hit ? hits[i].instance_id : 0;
            if (fb.instance[i] == oracle_id) {
                ++agree;
                if (hits[i].hit) {
                    const double rel =
                        std::abs(fb.depth[i] - hits[i].t) / std::max(hits[i].t, 1e-12);
                    if (rel > 1e-4) ++depth_bad;
                }
            }
        }
    }
    INFO("agreement " << agree << "/" << total);
    CHECK(static_cast<double>(agree) >= 0.99 * static_cast<double>(total));
    CHECK(depth_bad == 0);
}

TEST_CASE("raycast_reference on an empty scene reports no hits") {
    const ComposedScene s = empty_scene(8, 8);
    for (const HitRecord& h : raycast_reference(s)) {
        CHECK_FALSE(h.hit);
        CHECK(h.instance_id == 0);
    }
}

TEST_CASE("raycast_pixel hits an axis-aligned quad at depth 2") {
    ComposedScene s;
    s.camera = axis_camera(64, 64);
    ObjectInstance inst;
    inst.instance_id = 3;
    inst.semantic_class = SemanticClass::car;
    inst.mesh = full_frame_triangle(2.0);
    s.instances.push_back(inst);

    const DrawList list = build_draw_list(s);
    const HitRecord h = raycast_pixel(list, s.camera, 32, 32);
    REQUIRE(h.hit);
    // Unnormalized ray with z = 1 makes t the camera-space depth.
    CHECK(h.t == Catch::Approx(2.0));
    CHECK(h.instance_id == 3);
    CHECK(h.position.z == Catch::Approx(2.0));
}

TEST_CASE("raycast tie-break picks the earliest triangle in the list") {
    DrawList list;
    DrawTriangle tri;
    tri.v[0] = Vec3{-10, -10, 2};
    tri.v[1] = Vec3{10, -10, 2};
    tri.v[2] = Vec3{0, 20, 2};
    tri.n[0] = tri.n[1] = tri.n[2] = Vec3{0, 0, -1};

    tri.instance_id = 4;
    list.triangles.push_back(tri);
    tri.instance_id = 9; // geometrically identical, later in the list
    list.triangles.push_back(tri);

    const CameraModel cam = axis_camera(16, 16);
    const HitRecord h = raycast_pixel(list, cam, 8, 8);
    REQUIRE(h.hit);
    CHECK(h.instance_id == 4);
    CHECK(h.triangle_index == 0);
}

TEST_CASE("raycast ignores hits inside the near clip") {
    ComposedScene s;
    s.camera = axis_camera(16, 16);
    ObjectInstance inst;
    inst.instance_id = 1;
    inst.semantic_class = SemanticClass::car;
    inst.mesh = full_frame_triangle(0.005); // closer than near_clip = 0.01
    s.instances.push_back(inst);

    const DrawList list = build_draw_list(s);
    CHECK_FALSE(raycast_pixel(list, s.camera, 8, 8).hit);
}
