#include <catch2/catch_amalgamated.hpp>

#include <floodsynth/annotate/exporters.hpp>

#include <random>

using namespace floodsynth;

TEST_CASE("yolo_line for a full 128x128 frame") {
    BBox2D box;
    box.x0 = 0;
    box.y0 = 0;
    box.x1 = 127;
    box.y1 = 127;
    box.class_id = 2;
    CHECK(yolo_line(box, 128, 128) == "2 0.500000 0.500000 1.000000 1.000000");
}

TEST_CASE("yolo_line for a single pixel") {
    BBox2D box;
    box.x0 = box.x1 = 5;
    box.y0 = box.y1 = 7;
    box.class_id = 1;
    // Pixel center convention: (5 + 0.5)/16, (7 + 0.5)/16, 1/16 extents.
    CHECK(yolo_line(box, 16, 16) == "1 0.343750 0.468750 0.062500 0.062500");
}

TEST_CASE("parse_yolo reads back what yolo_line wrote") {
    const std::string text = "2 0.500000 0.500000 1.000000 1.000000\n"
                             "0 0.343750 0.468750 0.062500 0.062500\n";
    const auto labels = parse_yolo(text);
    REQUIRE(labels.size() == 2);
    CHECK(labels[0].class_id == 2);
    CHECK(labels[0].cx == Catch::Approx(0.5));
    CHECK(labels[1].w == Catch::Approx(0.0625));
}

TEST_CASE("parse_yolo tolerates CRLF and blank lines") {
    const auto labels = parse_yolo("1 0.5 0.5 0.25 0.25\r\n\n2 0.1 0.1 0.05 0.05\n");
    REQUIRE(labels.size() == 2);
    CHECK(labels[1].class_id == 2);
}

TEST_CASE("parse_yolo enforces the five-field grammar") {
    CHECK_THROWS_WITH(parse_yolo("1 0.5 0.5 0.25\n"),
                      Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse_yolo("1 0.5 0.5 0.25 0.25 extra\n"),
                      Catch::Matchers::ContainsSubstring("malformed"));
    CHECK_THROWS_WITH(parse_yolo("x 0.5 0.5 0.25 0.25\n"),
                      Catch::Matchers::ContainsSubstring("malformed"));
    CHECK_THROWS_WITH(parse_yolo("-1 0.5 0.5 0.25 0.25\n"),
                      Catch::Matchers::ContainsSubstring("negative class"));
    CHECK_THROWS_WITH(parse_yolo("1 1.5 0.5 0.25 0.25\n"),
                      Catch::Matchers::ContainsSubstring("outside (0,1]"));
    CHECK_THROWS_WITH(parse_yolo("1 0.5 0.5 0.25 0.25\n1 0 0.5 0.25 0.25\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("YOLO boxes survive the round trip within half a pixel") {
    std::mt19937_64 rng(81);
    std::uniform_int_distribution<int> lo(0, 100);
    std::uniform_int_distribution<int> span(0, 27);
    const int W = 640, H = 480;
    for (int i = 0; i < 400; ++i) {
        BBox2D box;
        box.x0 = lo(rng);
        box.y0 = lo(rng);
        box.x1 = box.x0 + span(rng);
        box.y1 = box.y0 + span(rng);
        box.class_id = i % 5;

        const auto labels = parse_yolo(yolo_line(box, W, H) + "\n");
        REQUIRE(labels.size() == 1);
        const BBox2D back = labels[0].to_pixels(W, H);
        CHECK(back.x0 == box.x0);
        CHECK(back.y0 == box.y0);
        CHECK(back.x1 == box.x1);
        CHECK(back.y1 == box.y1);
        CHECK(back.class_id == box.class_id);
    }
}

TEST_CASE("export_camera emits intrinsics, extrinsics, and position") {
    CameraModel cam = make_camera(320, 240, 70.0, Vec3{1.0, -6.0, 3.0}, Vec3{0, 0, 0});
    const std::string text = export_camera(cam);
    const CameraModel back = parse_camera_json(text);

    CHECK(back.fx == Catch::Approx(cam.fx));
    CHECK(back.fy == Catch::Approx(cam.fy));
    CHECK(back.cx == Catch::Approx(cam.cx));
    CHECK(back.cy == Catch::Approx(cam.cy));
    CHECK(back.width == 320);
    CHECK(back.height == 240);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(back.extrinsics.rotation(r, c) ==
                  Catch::Approx(cam.extrinsics.rotation(r, c)).margin(1e-12));
    CHECK(norm(back.extrinsics.translation - cam.extrinsics.translation) < 1e-12);

    // Redundant position field agrees with the extrinsics: R * pos + t = 0.
    const nlohmann::json j = nlohmann::json::parse(text);
    const Vec3 pos{j.at("position")[0], j.at("position")[1], j.at("position")[2]};
    CHECK(norm(back.extrinsics.rotation * pos + back.extrinsics.translation) < 1e-9);
    CHECK(norm(pos - Vec3{1.0, -6.0, 3.0}) < 1e-9);
}

TEST_CASE("camera JSON trivial positions") {
    CameraModel cam;
    cam.fx = cam.fy = 100.0;
    cam.cx = cam.cy = 64.0;
    cam.width = cam.height = 128;

    // Identity extrinsics: the camera sits at the origin.
    nlohmann::json j = nlohmann::json::parse(export_camera(cam));
    CHECK(j.at("position")[0].get<double>() == Catch::Approx(0.0));
    CHECK(j.at("position")[2].get<double>() == Catch::Approx(0.0));

    // Pure translation t = (0,0,-5) puts the camera at +5 on z.
    cam.extrinsics.translation = Vec3{0.0, 0.0, -5.0};
    j = nlohmann::json::parse(export_camera(cam));
    CHECK(j.at("position")[2].get<double>() == Catch::Approx(5.0));
}

TEST_CASE("parse_camera_json rejects short extrinsics") {
    CHECK_THROWS_AS(parse_camera_json(R"({"fx":1,"fy":1,"cx":0,"cy":0,
        "width":2,"height":2,"extrinsics":[1,2,3]})"),
                    std::runtime_error);
}

TEST_CASE("export_pointcloud_ply formats the header and vertices") {
    CHECK(export_pointcloud_ply({}) ==
          "ply\nformat ascii 1.0\nelement vertex 0\nproperty float x\n"
          "property float y\nproperty float z\nend_header\n");

    const std::string one = export_pointcloud_ply({Vec3{0.0, 0.0, 2.0}});
    CHECK(one.find("element vertex 1") != std::string::npos);
    CHECK(one.find("0.000000 0.000000 2.000000\n") != std::string::npos);
}

TEST_CASE("PLY round-trip keeps six-decimal precision") {
    std::mt19937_64 rng(82);
    std::uniform_real_distribution<double> d(-50.0, 50.0);
    std::vector<Vec3> points;
    for (int i = 0; i < 100; ++i) points.push_back({d(rng), d(rng), d(rng)});

    const auto back = parse_ply(export_pointcloud_ply(points));
    REQUIRE(back.size() == points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        CHECK(back[i].x == Catch::Approx(points[i].x).margin(5e-7));
        CHECK(back[i].y == Catch::Approx(points[i].y).margin(5e-7));
        CHECK(back[i].z == Catch::Approx(points[i].z).margin(5e-7));
    }
}

TEST_CASE("parse_ply rejects malformed documents") {
    CHECK_THROWS_WITH(parse_ply("obj\n"), Catch::Matchers::ContainsSubstring("bad magic"));
    CHECK_THROWS_WITH(parse_ply("ply\nelement vertex 2\n"),
                      Catch::Matchers::ContainsSubstring("end_header"));
    CHECK_THROWS_WITH(parse_ply("ply\nformat ascii 1.0\nelement vertex 2\nend_header\n1 2 3\n"),
                      Catch::Matchers::ContainsSubstring("truncated"));
}
