#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "scattex/bench.hpp"
#include "scattex/classifier.hpp"
#include "scattex/colorspace.hpp"
#include "scattex/dataset.hpp"
#include "scattex/features.hpp"
#include "scattex/image_io.hpp"
#include "scattex/scattering.hpp"
#include "scattex/synth.hpp"

namespace fs = std::filesystem;
using namespace scattex;

namespace {

int run(int argc, char** argv) {
    CLI::App app{"scattex - color texture classification with wavelet scattering"};
    app.require_subcommand(1);

    // ---- convert ----
    auto* cmd_convert = app.add_subcommand("convert", "convert an RGB image to a color space");
    std::string conv_space = "rgb";
    fs::path conv_in, conv_out;
    cmd_convert->add_option("--to", conv_space, "target color space tag")->required();
    cmd_convert->add_option("input", conv_in, "input PNG/PPM")->required();
    cmd_convert->add_option("output", conv_out, ".f32 output (one plane record per channel)")
        ->required();

    // ---- filters ----
    auto* cmd_filters = app.add_subcommand("filters", "dump filter bank diagnostics");
    FilterBankParams fb_params;
    std::size_t fb_size = 256;
    fs::path fb_dir;
    cmd_filters->add_option("--J", fb_params.scales, "scale count");
    cmd_filters->add_option("--K", fb_params.angles, "angle count");
    cmd_filters->add_option("--size", fb_size, "grid size");
    cmd_filters->add_option("--dump-dir", fb_dir, "output directory")->required();

    // ---- extract ----
    auto* cmd_extract = app.add_subcommand("extract", "extract scattering features of a dataset");
    std::string ex_space = "rgb";
    ScatteringConfig ex_params;
    fs::path ex_out, ex_root, ex_cache;
    cmd_extract->add_option("--space", ex_space, "color space tag");
    cmd_extract->add_option("--J", ex_params.scales, "scale count");
    cmd_extract->add_option("--K", ex_params.angles, "angle count");
    cmd_extract->add_option("--oversampling", ex_params.oversampling, "oversampling exponent");
    cmd_extract->add_option("--max-order", ex_params.max_order, "scattering order (0..2)");
    cmd_extract->add_option("--cache", ex_cache, "feature cache directory");
    cmd_extract->add_option("--out", ex_out, "output CSV")->required();
    cmd_extract->add_option("dataset", ex_root, "dataset root (class-per-directory)")->required();

    // ---- classify ----
    auto* cmd_classify = app.add_subcommand("classify", "dimension sweep of the PCA classifier");
    fs::path cl_features, cl_out;
    SplitSpec cl_split;
    std::vector<std::size_t> cl_dims;
    cmd_classify->add_option("--features", cl_features, "feature CSV from extract")->required();
    cmd_classify->add_option("--train-per-class", cl_split.train_per_class, "training images per class");
    cmd_classify->add_option("--splits", cl_split.n_splits, "number of random splits");
    cmd_classify->add_option("--dims", cl_dims, "principal component dimensions")
        ->required()
        ->delimiter(',');
    cmd_classify->add_option("--seed", cl_split.seed, "split RNG seed");
    cmd_classify->add_option("--out", cl_out, "output CSV (default: stdout)");

    // ---- bench ----
    auto* cmd_bench = app.add_subcommand("bench", "run the full accuracy-table benchmark");
    fs::path bench_config_path;
    cmd_bench->add_option("--config", bench_config_path, "JSON config")->required();

    // ---- synth ----
    auto* cmd_synth = app.add_subcommand("synth", "generate a synthetic grating dataset");
    SynthParams synth_params;
    fs::path synth_out;
    cmd_synth->add_option("--out", synth_out, "output dataset root")->required();
    cmd_synth->add_option("--classes", synth_params.classes, "number of classes");
    cmd_synth->add_option("--per-class", synth_params.per_class, "images per class");
    cmd_synth->add_option("--size", synth_params.size, "image side length");
    cmd_synth->add_option("--seed", synth_params.seed, "RNG seed");

    // ---- plot ----
    auto* cmd_plot = app.add_subcommand("plot", "render an accuracy table as an SVG chart");
    fs::path plot_table, plot_out;
    std::vector<std::string> plot_spaces;
    cmd_plot->add_option("--table", plot_table, "accuracy CSV from bench")->required();
    cmd_plot->add_option("--spaces", plot_spaces, "space tags to draw (default: all)")
        ->delimiter(',');
    cmd_plot->add_option("--out", plot_out, "output SVG")->required();

    CLI11_PARSE(app, argc, argv);

    if (cmd_convert->parsed()) {
        const ColorImage img = convert(load_image(conv_in), color_space_from_tag(conv_space));
        write_planes_f32(img.planes(), conv_out);
    } else if (cmd_filters->parsed()) {
        fb_params.width = fb_size;
        fb_params.height = fb_size;
        const FilterBank bank = build_filterbank(fb_params);
        fs::create_directories(fb_dir);
        for (std::size_t j = 0; j < fb_params.scales; ++j)
            for (std::size_t k = 0; k < fb_params.angles; ++k) {
                char name[48];
                std::snprintf(name, sizeof(name), "psi_j%zu_k%zu.png", j, k);
                std::vector<double> mag(bank.psi(j, k).size());
                for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(bank.psi(j, k)[i]);
                save_plane_image(ImagePlane(fb_size, fb_size, std::move(mag)), fb_dir / name);
            }
        save_plane_image(ImagePlane(fb_size, fb_size, bank.phi()), fb_dir / "phi.png");
        const LittlewoodPaley lp = littlewood_paley(bank);
        std::ofstream report(fb_dir / "littlewood_paley.txt");
        report << "min_response " << lp.min_response << "\nmax_response " << lp.max_response
               << "\n";
        std::cout << "littlewood-paley: min " << lp.min_response << " max " << lp.max_response
                  << "\n";
    } else if (cmd_extract->parsed()) {
        const FeatureMatrix features =
            extract_features(ex_root, color_space_from_tag(ex_space), ex_params, ex_cache);
        write_features_csv(features, ex_out);
        std::cout << "wrote " << features.columns.size() << " rows x " << features.dims
                  << " features to " << ex_out.string() << "\n";
    } else if (cmd_classify->parsed()) {
        const FeatureMatrix features = read_features_csv(cl_features);
        std::ostringstream csv;
        csv << "dim,mean_accuracy\n";
        for (std::size_t d : cl_dims) {
            const SplitResult r = evaluate_splits(features, cl_split, d);
            char cell[32];
            std::snprintf(cell, sizeof(cell), "%.2f", r.mean_accuracy);
            csv << d << ',' << cell << '\n';
        }
        if (cl_out.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream out(cl_out, std::ios::binary);
            if (!out) throw IoError("cannot write " + cl_out.string());
            out << csv.str();
        }
    } else if (cmd_bench->parsed()) {
        const BenchConfig config = load_bench_config(bench_config_path);
        fs::create_directories(config.out_dir);
        const AccuracyTable table = run_benchmark(config);
        emit_csv(table, config.out_dir / "accuracy.csv");
        emit_plot(table, table.spaces, config.out_dir / "accuracy.svg");
        std::cout << "wrote " << (config.out_dir / "accuracy.csv").string() << "\n";
    } else if (cmd_synth->parsed()) {
        generate_synthetic_dataset(synth_params, synth_out);
        std::cout << "wrote " << synth_params.classes << " classes x " << synth_params.per_class
                  << " images to " << synth_out.string() << "\n";
    } else if (cmd_plot->parsed()) {
        const AccuracyTable table = parse_accuracy_csv(plot_table);
        std::vector<ColorSpace> subset;
        for (const auto& tag : plot_spaces) subset.push_back(color_space_from_tag(tag));
        if (subset.empty()) subset = table.spaces;
        emit_plot(table, subset, plot_out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
