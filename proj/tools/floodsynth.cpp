// Command-line front end: generate / stats / validate / export-labels.
// Exit codes: 0 ok, 1 validation findings, 2 configuration error, 3 I/O error.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "floodsynth/floodsynth.hpp"

namespace {

int default_jobs_from_env() {
    const char* env = std::getenv("FLOODSYNTH_JOBS");
    if (!env) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return 1;
    return static_cast<int>(v);
}

int run_generate(const std::string& config_path, const std::string& out_dir, long long seed,
                 bool seed_set, int jobs) {
    std::string text;
    try {
        text = floodsynth::read_text_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    floodsynth::GenerationConfig cfg = floodsynth::parse_config(text);
    for (const std::string& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
    if (seed_set) cfg.master_seed = static_cast<std::uint64_t>(seed);

    const floodsynth::DatasetManifest manifest =
        floodsynth::generate_dataset(cfg, jobs, out_dir);
    const floodsynth::StatsTable stats = floodsynth::dataset_stats(manifest);
    std::cout << "generated " << manifest.entries.size() << " frames into "
              << (out_dir.empty() ? cfg.output_dir : out_dir) << "\n"
              << floodsynth::stats_text(stats);
    return 0;
}

int run_stats(const std::string& manifest_path) {
    std::string text;
    try {
        text = floodsynth::read_text_file(manifest_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    const floodsynth::DatasetManifest manifest = floodsynth::parse_manifest(text);
    const floodsynth::StatsTable stats = floodsynth::dataset_stats(manifest);
    std::cout << floodsynth::stats_text(stats) << floodsynth::stats_to_json(stats).dump(2)
              << "\n";
    return 0;
}

int run_validate(const std::string& dataset_dir) {
    const std::vector<std::string> report = floodsynth::validate_dataset(dataset_dir);
    if (report.empty()) {
        std::cout << "ok: no violations\n";
        return 0;
    }
    for (const std::string& v : report) std::cout << "violation: " << v << "\n";
    std::cout << report.size() << " violation(s)\n";
    return 1;
}

int run_export_labels(const std::string& dataset_dir, const std::string& format) {
    if (format != "yolo") throw floodsynth::ConfigError("unsupported label format: " + format);
    std::string text;
    try {
        text = floodsynth::read_text_file(
            (std::filesystem::path(dataset_dir) / "manifest.json").string());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    const floodsynth::DatasetManifest manifest = floodsynth::parse_manifest(text);
    int width = 0, height = 0;
    try {
        width = manifest.config_snapshot.at("resolution").at(0).get<int>();
        height = manifest.config_snapshot.at("resolution").at(1).get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw floodsynth::IoError(std::string("manifest config snapshot: ") + e.what());
    }
    for (const floodsynth::FrameEntry& entry : manifest.entries) {
        std::string out;
        for (const floodsynth::InstanceLabel& label : entry.labels) {
            if (!label.bbox2d) continue;
            floodsynth::BBox2D box = *label.bbox2d;
            box.class_id = label.flood_level;
            out += floodsynth::yolo_line(box, width, height) + "\n";
        }
        const std::string path = (std::filesystem::path(dataset_dir) /
                                  (floodsynth::frame_stem(entry.frame_id) + ".txt"))
                                     .string();
        floodsynth::write_text_file(path, out);
    }
    std::cout << "re-exported yolo labels for " << manifest.entries.size() << " frames\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"floodsynth: deterministic synthetic urban-flood dataset generator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, manifest_path, dataset_dir, format = "yolo";
    long long seed = 0;
    int jobs = default_jobs_from_env();

    CLI::App* generate = app.add_subcommand("generate", "render a dataset from a config file");
    generate->add_option("--config", config_path, "generation config (JSON)")->required();
    generate->add_option("--out", out_dir, "output directory (default: config's output_dir)");
    CLI::Option* seed_opt =
        generate->add_option("--seed", seed, "override the config's master_seed");
    generate->add_option("--jobs", jobs, "worker threads (env FLOODSYNTH_JOBS)");

    CLI::App* stats = app.add_subcommand("stats", "print dataset statistics");
    stats->add_option("--manifest", manifest_path, "path to manifest.json")->required();

    CLI::App* validate = app.add_subcommand("validate", "check a dataset for consistency");
    validate->add_option("--dataset", dataset_dir, "dataset directory")->required();

    CLI::App* export_labels =
        app.add_subcommand("export-labels", "re-emit label files from the manifest");
    export_labels->add_option("--dataset", dataset_dir, "dataset directory")->required();
    export_labels->add_option("--format", format, "label format (yolo)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage is a config error
    }

    try {
        if (generate->parsed())
            return run_generate(config_path, out_dir, seed, seed_opt->count() > 0, jobs);
        if (stats->parsed()) return run_stats(manifest_path);
        if (validate->parsed()) return run_validate(dataset_dir);
        if (export_labels->parsed()) return run_export_labels(dataset_dir, format);
    } catch (const floodsynth::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const floodsynth::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
