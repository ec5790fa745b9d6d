#include <catch2/catch_amalgamated.hpp>

#include <floodsynth/render/shading.hpp>

#include <vector>

using namespace floodsynth;

namespace {

MaterialParams plain_material(double r, double g, double b) {
    return MaterialParams{.base_color = {r, g, b}, .roughness = 1.0, .opacity = 1.0,
                          .specular = 0.0};
}

} // namespace

TEST_CASE("shade_surface dark limit: no lights yields black") {
    const MaterialParams m = plain_material(1.0, 0.5, 0.25);
    const Rgb out = shade_surface(m, Vec3{0, 0, 1}, {}, Vec3{0, 0, -1});
    CHECK(out[0] == 0.0);
    CHECK(out[1] == 0.0);
    CHECK(out[2] == 0.0);
}

TEST_CASE("shade_surface full diffuse: normal aligned with the light") {
    const MaterialParams m = plain_material(1.0, 0.5, 0.25);
    const std::vector<LightParams> lights{{Vec3{0, 0, 1}, 1.0, 0.0}};
    const Rgb out = shade_surface(m, Vec3{0, 0, 1}, lights, Vec3{0, 0, -1});
    CHECK(out[0] == Catch::Approx(1.0));
    CHECK(out[1] == Catch::Approx(0.5));
    CHECK(out[2] == Catch::Approx(0.25));
}

TEST_CASE("shade_surface grazing incidence leaves only ambient") {
    const MaterialParams m = plain_material(0.8, 0.8, 0.8);
    const std::vector<LightParams> lights{{Vec3{1, 0, 0}, 1.0, 0.25}};
    // Normal perpendicular to the light: diffuse term vanishes.
    const Rgb out = shade_surface(m, Vec3{0, 0, 1}, lights, Vec3{0, 0, -1});
    CHECK(out[0] == Catch::Approx(0.25 * 0.8));
    CHECK(out[1] == Catch::Approx(0.25 * 0.8));
    CHECK(out[2] == Catch::Approx(0.25 * 0.8));
}

TEST_CASE("shade_surface backlit surface gets no negative diffuse") {
    const MaterialParams m = plain_material(1.0, 1.0, 1.0);
    const std::vector<LightParams> lights{{Vec3{0, 0, -1}, 2.0, 0.1}};
    const Rgb out = shade_surface(m, Vec3{0, 0, 1}, lights, Vec3{0, 0, -1});
    CHECK(out[0] == Catch::Approx(0.1)); // ambient only, never negative
}

TEST_CASE("shade_surface output is always clamped to [0,1]") {
    MaterialParams m = plain_material(1.0, 1.0, 1.0);
    m.specular = 1.0;
    m.roughness = 0.0;
    const std::vector<LightParams> lights{{Vec3{0, 0, 1}, 50.0, 1.0}};
    const Rgb out = shade_surface(m, Vec3{0, 0, 1}, lights, Vec3{0, 0, 1});
    for (int c = 0; c < 3; ++c) {
        CHECK(out[c] >= 0.0);
        CHECK(out[c] <= 1.0);
    }
}

TEST_CASE("shade_surface specular peaks at the half vector") {
    MaterialParams m = plain_material(0.0, 0.0, 0.0);
    m.specular = 1.0;
    m.roughness = 0.0;
    const Vec3 light_dir = normalized(Vec3{1, 0, 1});
    const Vec3 view_mirror = normalized(Vec3{-1, 0, 1});
    const std::vector<LightParams> lights{{light_dir, 1.0, 0.0}};

    // View along the mirror direction: half vector == normal, maximal lobe.
    const Rgb at_peak = shade_surface(m, Vec3{0, 0, 1}, lights, view_mirror);
    // View 90 degrees off: lobe falls away.
    const Rgb off_peak = shade_surface(m, Vec3{0, 0, 1}, lights, Vec3{0, 1, 0});
    CHECK(at_peak[0] == Catch::Approx(1.0));
    CHECK(off_peak[0] < at_peak[0]);
}

TEST_CASE("composite_water blends by opacity") {
    const Rgb water{0.2, 0.4, 0.8};
    const Rgb under{1.0, 0.0, 0.0};

    const Rgb opaque = composite_water(water, under, 1.0);
    CHECK(opaque[0] == Catch::Approx(0.2));
    CHECK(opaque[2] == Catch::Approx(0.8));

    const Rgb invisible = composite_water(water, under, 0.0);
    CHECK(invisible[0] == Catch::Approx(1.0));
    CHECK(invisible[2] == Catch::Approx(0.0));

    const Rgb half = composite_water(water, under, 0.5);
    CHECK(half[0] == Catch::Approx(0.6));
    CHECK(half[1] == Catch::Approx(0.2));
    CHECK(half[2] == Catch::Approx(0.4));
}

TEST_CASE("quantize_channel rounds and clamps") {
    CHECK(quantize_channel(0.0) == 0);
    CHECK(quantize_channel(1.0) == 255);
    CHECK(quantize_channel(-0.5) == 0);
    CHECK(quantize_channel(2.0) == 255);
    CHECK(quantize_channel(0.5) == 128); // lround(127.5)
}
