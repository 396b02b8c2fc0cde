#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scattex/classifier.hpp"
#include "scattex/features.hpp"
#include "scattex/filterbank.hpp"
#include "scattex/image.hpp"

namespace scattex {

struct ScatteringConfig {
    std::size_t scales = 4; // J
    std::size_t angles = 8; // K
    int max_order = 2;
    int oversampling = 1;
};

struct BenchConfig {
    std::filesystem::path dataset_root;
    std::vector<ColorSpace> spaces;
    ScatteringConfig scattering;
    std::vector<std::size_t> dims; // strictly increasing, each >= 1
    SplitSpec split;
    std::filesystem::path out_dir;

    void validate() const;
};

/// Parses a JSON document mirroring the BenchConfig field names.
BenchConfig load_bench_config(const std::filesystem::path& path);

struct AccuracyTable {
    std::vector<ColorSpace> spaces;
    std::vector<std::size_t> dims;
    std::vector<std::vector<double>> cells;         // [space][dim], mean accuracy %
    std::vector<std::vector<std::vector<double>>> per_split; // [space][dim][split]
    BenchConfig config;
};

/// Scattering features for every image of a dataset in one color space.
/// Results are cached on disk keyed by a content hash of (image bytes,
/// space, scattering params); cache_dir empty disables caching.
FeatureMatrix extract_features(const std::filesystem::path& dataset_root, ColorSpace space,
                               const ScatteringConfig& params,
                               const std::filesystem::path& cache_dir);

/// Cache directory for a config: $SCATTER_TEX_CACHE if set, else
/// <out_dir>/cache.
std::filesystem::path resolve_cache_dir(const BenchConfig& config);

AccuracyTable run_benchmark(const BenchConfig& config);

/// Main grid: header "colorspace,dim5,..." then one row per space, cells
/// with 2 decimals. Also writes a <stem>_splits.csv sidecar with per-split
/// values.
void emit_csv(const AccuracyTable& table, const std::filesystem::path& path);

/// Parses the main grid back (per-split sidecar not required).
AccuracyTable parse_accuracy_csv(const std::filesystem::path& path);

/// SVG accuracy-vs-dimension chart for a subset of the table's spaces.
void emit_plot(const AccuracyTable& table, const std::vector<ColorSpace>& spaces_subset,
               const std::filesystem::path& path);

} // namespace scattex
