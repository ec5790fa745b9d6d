// Dataset QA: re-checks what generation claims. File existence, YOLO
// grammar, boxes inside the image, flood-level labels re-derived from the
// stored submersion ratios, fine-grained/instance refinement on every frame,
// and bounding-box tightness against the instance masks on a sampled subset.
// An empty report means the dataset is self-consistent.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "floodsynth/annotate/bbox.hpp"
#include "floodsynth/annotate/exporters.hpp"
#include "floodsynth/annotate/image_io.hpp"
#include "floodsynth/flood/levels.hpp"
#include "floodsynth/pipeline/errors.hpp"
#include "floodsynth/pipeline/manifest.hpp"

namespace floodsynth {

inline std::vector<std::string> validate_dataset(const std::string& dataset_dir) {
    namespace fs = std::filesystem;
    const fs::path dir(dataset_dir);
    std::vector<std::string> report;

    std::string manifest_text;
    try {
        manifest_text = read_text_file((dir / "manifest.json").string());
    } catch (const std::exception& e) {
        throw IoError(std::string("validate: ") + e.what());
    }
    const DatasetManifest manifest = parse_manifest(manifest_text);

    if (fs::exists(dir / ".partial"))
        report.push_back("dataset is marked partial (.partial marker present)");

    // Pull the handful of snapshot fields the checks need; the snapshot is
    // data here, not a config to re-validate (its file references may not
    // exist next to the dataset).
    int width = 0, height = 0, min_pixels = kDefaultMinPixels;
    FloodLevelTable table;
    long expected_frames = -1;
    const nlohmann::json& cfg = manifest.config_snapshot;
    try {
        width = cfg.at("resolution").at(0).get<int>();
        height = cfg.at("resolution").at(1).get<int>();
        if (cfg.contains("min_pixels")) min_pixels = cfg.at("min_pixels").get<int>();
        if (cfg.contains("flood_table")) {
            const auto& t = cfg.at("flood_table");
            for (int i = 0; i < 3; ++i) table.thresholds[i] = t.at("thresholds").at(i).get<double>();
            table.reference_height = t.at("reference_height").get<double>();
        }
        if (cfg.contains("frames_per_level")) {
            expected_frames = 0;
            for (const auto& [key, count] : cfg.at("frames_per_level").items())
                expected_frames += count.get<long>();
        }
    } catch (const nlohmann::json::exception& e) {
        report.push_back(std::string("config snapshot is malformed: ") + e.what());
        return report;
    }

    if (expected_frames >= 0 && static_cast<long>(manifest.entries.size()) != expected_frames)
        report.push_back("manifest has " + std::to_string(manifest.entries.size()) +
                         " frames but config promises " + std::to_string(expected_frames));

    // Tightness re-derivation is the expensive check; sample about 20 frames.
    const std::size_t tightness_stride =
        manifest.entries.empty() ? 1 : std::max<std::size_t>(1, manifest.entries.size() / 20);

    for (std::size_t ei = 0; ei < manifest.entries.size(); ++ei) {
        const FrameEntry& entry = manifest.entries[ei];
        const std::string tag = "frame " + std::to_string(entry.frame_id);

        bool files_ok = true;
        for (const std::string& name : entry.files) {
            if (!fs::exists(dir / name)) {
                report.push_back(tag + ": missing file " + name);
                files_ok = false;
            }
        }

        // Label coherence against the stored ratio and the snapshot's table.
        for (const InstanceLabel& label : entry.labels) {
            const std::string ltag = tag + " instance " + std::to_string(label.instance_id);
            int expected_level = 0;
            try {
                expected_level = flood_level_label(entry.scene_flood_level > 0,
                                                   label.submersion_ratio, table);
            } catch (const std::exception& e) {
                report.push_back(ltag + ": submersion_ratio invalid: " + e.what());
                continue;
            }
            if (label.flood_level != expected_level)
                report.push_back(ltag + ": flood_level " + std::to_string(label.flood_level) +
                                 " but submersion_ratio re-derives to " +
                                 std::to_string(expected_level));
            if (label.bbox2d) {
                const BBox2D& b = *label.bbox2d;
                if (b.x0 < 0 || b.y0 < 0 || b.x1 >= width || b.y1 >= height || b.x0 > b.x1 ||
                    b.y0 > b.y1)
                    report.push_back(ltag + ": bbox2d outside the image");
                if (label.pixel_count < min_pixels)
                    report.push_back(ltag + ": bbox2d present below min_pixels");
            }
        }

        if (!files_ok) continue;
        const std::string stem = frame_stem(entry.frame_id);

        // YOLO grammar + boxes inside the image.
        std::size_t boxed = 0;
        for (const InstanceLabel& label : entry.labels)
            if (label.bbox2d) ++boxed;
        try {
            const auto labels = parse_yolo(read_text_file((dir / (stem + ".txt")).string()));
            if (labels.size() != boxed)
                report.push_back(tag + ": yolo has " + std::to_string(labels.size()) +
                                 " lines but manifest lists " + std::to_string(boxed) +
                                 " boxed instances");
            for (const YoloLabel& l : labels) {
                const BBox2D b = l.to_pixels(width, height);
                if (b.x0 < 0 || b.y0 < 0 || b.x1 >= width || b.y1 >= height)
                    report.push_back(tag + ": yolo box outside the image");
                if (l.class_id > 4) report.push_back(tag + ": yolo class above 4");
            }
        } catch (const std::exception& e) {
            report.push_back(tag + ": " + e.what());
        }

        // Segmentation refinement on every frame.
        try {
            int iw = 0, ih = 0, fw = 0, fh = 0;
            const auto inst =
                decode_pgm16(read_binary_file((dir / (stem + ".inst.pgm")).string()), iw, ih);
            const auto fine =
                decode_pgm16(read_binary_file((dir / (stem + ".fine.pgm")).string()), fw, fh);
            if (iw != width || ih != height || fw != width || fh != height) {
                report.push_back(tag + ": segmentation map resolution mismatch");
            } else {
                for (std::size_t i = 0; i < inst.size(); ++i) {
                    if (fine[i] != 0 && fine[i] / 256 != inst[i]) {
                        report.push_back(tag + ": fine_grained/instance refinement broken at pixel " +
                                         std::to_string(i));
                        break;
                    }
                }

                // Tightness: stored boxes must equal a fresh scan of the mask.
                if (ei % tightness_stride == 0) {
                    for (const InstanceLabel& label : entry.labels) {
                        const auto fresh = bbox2d_from_instance_mask(inst, width, height,
                                                                     label.instance_id, min_pixels);
                        const std::string ltag =
                            tag + " instance " + std::to_string(label.instance_id);
                        if (fresh.has_value() != label.bbox2d.has_value()) {
                            report.push_back(ltag + ": bbox2d presence disagrees with the mask");
                            continue;
                        }
                        if (fresh && (fresh->x0 != label.bbox2d->x0 || fresh->y0 != label.bbox2d->y0 ||
                                      fresh->x1 != label.bbox2d->x1 || fresh->y1 != label.bbox2d->y1))
                            report.push_back(ltag + ": bbox2d is not tight against the mask");
                        long count = 0;
                        for (std::uint16_t v : inst)
                            if (v == label.instance_id) ++count;
                        if (count != label.pixel_count)
                            report.push_back(ltag + ": pixel_count " +
                                             std::to_string(label.pixel_count) +
                                             " but mask has " + std::to_string(count));
                    }
                }
            }
        } catch (const std::exception& e) {
            report.push_back(tag + ": " + e.what());
        }
    }
    return report;
}

}  // namespace floodsynth
