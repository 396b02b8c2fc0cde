#include "scattex/bench.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "scattex/dataset.hpp"
#include "scattex/colorspace.hpp"
#include "scattex/image_io.hpp"
#include "scattex/scattering.hpp"
#include "scattex/svg_plot.hpp"

namespace scattex {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t feature_cache_key(const fs::path& image, ColorSpace space,
                                const ScatteringConfig& params) {
    std::ifstream in(image, std::ios::binary);
    if (!in) throw IoError("cannot read " + image.string());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        h = fnv1a(buf, static_cast<std::size_t>(in.gcount()), h);
    const std::string tail = to_tag(space) + "|" + std::to_string(params.scales) + "|" +
                             std::to_string(params.angles) + "|" +
                             std::to_string(params.max_order) + "|" +
                             std::to_string(params.oversampling);
    return fnv1a(tail.data(), tail.size(), h);
}

std::vector<double> compute_image_features(const fs::path& image, ColorSpace space,
                                           const ScatteringConfig& params,
                                           FilterBankCache& banks) {
    const ColorImage rgb = load_image(image);
    const ColorImage converted = convert(rgb, space);
    const auto bank = banks.for_plane(converted.width(), converted.height());
    return scatter_color(converted, *bank, params.max_order, params.oversampling);
}

std::string format_cell(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

void BenchConfig::validate() const {
    if (dims.empty()) throw ParameterError("bench config: dims must be nonempty");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1) throw ParameterError("bench config: dims must be >= 1");
        if (i > 0 && dims[i] <= dims[i - 1])
            throw ParameterError("bench config: dims must be strictly increasing");
    }
    if (spaces.empty()) throw ParameterError("bench config: spaces must be nonempty");
}

BenchConfig load_bench_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError("bad JSON in " + path.string() + ": " + e.what());
    }

    BenchConfig cfg;
    cfg.dataset_root = doc.at("dataset_root").get<std::string>();
    for (const auto& tag : doc.at("spaces"))
        cfg.spaces.push_back(color_space_from_tag(tag.get<std::string>()));
    cfg.scattering.scales = doc.value("J", 4);
    cfg.scattering.angles = doc.value("K", 8);
    cfg.scattering.max_order = doc.value("max_order", 2);
    cfg.scattering.oversampling = doc.value("oversampling", 1);
    cfg.dims = doc.at("dims").get<std::vector<std::size_t>>();
    cfg.split.train_per_class = doc.at("train_per_class").get<std::size_t>();
    cfg.split.n_splits = doc.at("splits").get<std::size_t>();
    cfg.split.seed = doc.value("seed", 0);
    cfg.out_dir = doc.at("out_dir").get<std::string>();
    cfg.validate();
    return cfg;
}

FeatureMatrix extract_features(const fs::path& dataset_root, ColorSpace space,
                               const ScatteringConfig& params, const fs::path& cache_dir) {
    const DatasetIndex index = index_dataset(dataset_root);
    if (!cache_dir.empty()) fs::create_directories(cache_dir);

    FilterBankCache banks(params.scales, params.angles);
    FeatureMatrix features;
    for (const auto& entry : index.entries) {
        std::vector<double> vec;
        fs::path cache_file;
        if (!cache_dir.empty()) {
            char name[32];
            std::snprintf(name, sizeof(name), "%016llx.f32",
                          static_cast<unsigned long long>(
                              feature_cache_key(entry.path, space, params)));
            cache_file = cache_dir / name;
        }
        if (!cache_file.empty() && fs::exists(cache_file)) {
            const auto planes = read_planes_f32(cache_file);
            vec.assign(planes.front().samples().begin(), planes.front().samples().end());
        } else {
            try {
                vec = compute_image_features(entry.path, space, params, banks);
            } catch (const std::exception& e) {
                throw DatasetError("extraction failed for space=" + to_tag(space) + " image=" +
                                   entry.path.string() + ": " + e.what());
            }
            if (!cache_file.empty())
                write_planes_f32({ImagePlane(vec.size(), 1, vec)}, cache_file);
        }
        features.add(std::move(vec), entry.label, entry.path.string());
    }
    return features;
}

fs::path resolve_cache_dir(const BenchConfig& config) {
    if (const char* env = std::getenv("SCATTER_TEX_CACHE"); env && *env) return env;
    return config.out_dir / "cache";
}

AccuracyTable run_benchmark(const BenchConfig& config) {
    config.validate();
    AccuracyTable table;
    table.spaces = config.spaces;
    table.dims = config.dims;
    table.config = config;
    const fs::path cache_dir = resolve_cache_dir(config);

    for (ColorSpace space : config.spaces) {
        const FeatureMatrix features =
            extract_features(config.dataset_root, space, config.scattering, cache_dir);
        std::vector<double> row;
        std::vector<std::vector<double>> row_splits;
        for (std::size_t d : config.dims) {
            // identical seed for every (space, dim) cell, so splits match
            const SplitResult r = evaluate_splits(features, config.split, d);
            row.push_back(r.mean_accuracy);
            row_splits.push_back(r.per_split);
        }
        table.cells.push_back(std::move(row));
        table.per_split.push_back(std::move(row_splits));
    }
    return table;
}

void emit_csv(const AccuracyTable& table, const fs::path& path) {
    if (table.cells.size() != table.spaces.size())
        throw ParameterError("emit_csv: incomplete table");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << "colorspace";
    for (std::size_t d : table.dims) out << ",dim" << d;
    out << '\n';
    for (std::size_t s = 0; s < table.spaces.size(); ++s) {
        if (table.cells[s].size() != table.dims.size())
            throw ParameterError("emit_csv: incomplete row");
        out << to_tag(table.spaces[s]);
        for (double v : table.cells[s]) out << ',' << format_cell(v);
        out << '\n';
    }
    if (!out) throw IoError("write failure: " + path.string());

    if (!table.per_split.empty()) {
        fs::path sidecar = path;
        sidecar.replace_filename(path.stem().string() + "_splits" + path.extension().string());
        std::ofstream splits(sidecar, std::ios::binary);
        if (!splits) throw IoError("cannot write " + sidecar.string());
        splits << "colorspace,dim,split,accuracy\n";
        for (std::size_t s = 0; s < table.spaces.size(); ++s)
            for (std::size_t d = 0; d < table.dims.size(); ++d)
                for (std::size_t r = 0; r < table.per_split[s][d].size(); ++r)
                    splits << to_tag(table.spaces[s]) << ',' << table.dims[d] << ',' << r << ','
                           << format_cell(table.per_split[s][d][r]) << '\n';
    }
}

AccuracyTable parse_accuracy_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path.string());
    AccuracyTable table;
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty CSV " + path.string());
    {
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ','); // "colorspace"
        while (std::getline(ss, cell, ',')) {
            if (cell.rfind("dim", 0) != 0) throw IoError("bad header cell: " + cell);
            table.dims.push_back(std::stoul(cell.substr(3)));
        }
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');
        table.spaces.push_back(color_space_from_tag(cell));
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != table.dims.size()) throw IoError("ragged CSV row in " + path.string());
        table.cells.push_back(std::move(row));
    }
    return table;
}

void emit_plot(const AccuracyTable& table, const std::vector<ColorSpace>& spaces_subset,
               const fs::path& path) {
    if (spaces_subset.empty()) throw ParameterError("emit_plot: empty space subset");
    std::vector<PlotSeries> series;
    for (ColorSpace space : spaces_subset) {
        const auto it = std::find(table.spaces.begin(), table.spaces.end(), space);
        if (it == table.spaces.end())
            throw ParameterError("emit_plot: space not in table: " + to_tag(space));
        PlotSeries s;
        s.name = to_tag(space);
        for (std::size_t d = 0; d < table.dims.size(); ++d) {
            s.x.push_back(static_cast<double>(table.dims[d]));
            s.y.push_back(table.cells[static_cast<std::size_t>(it - table.spaces.begin())][d]);
        }
        series.push_back(std::move(s));
    }
    write_svg_line_chart(series, "principal component dimension", "accuracy (%)", path);
}

} // namespace scattex
