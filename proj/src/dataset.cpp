#include "scattex/dataset.hpp"

#include <algorithm>

namespace scattex {

namespace fs = std::filesystem;

namespace {

bool is_image_file(const fs::path& p) {
    const std::string ext = p.extension().string();
    return ext == ".png" || ext == ".ppm" || ext == ".PNG" || ext == ".PPM";
}

} // namespace

DatasetIndex index_dataset(const fs::path& root) {
    if (!fs::is_directory(root)) throw DatasetError("dataset root is not a directory: " + root.string());

    DatasetIndex index;
    std::vector<fs::path> class_dirs;
    for (const auto& entry : fs::directory_iterator(root))
        if (entry.is_directory()) class_dirs.push_back(entry.path());
    if (class_dirs.empty()) throw DatasetError("dataset root has no class directories: " + root.string());
    std::sort(class_dirs.begin(), class_dirs.end());

    for (const auto& dir : class_dirs) {
        const std::string label = dir.filename().string();
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && is_image_file(entry.path())) files.push_back(entry.path());
        if (files.empty()) throw DatasetError("class directory has no images: " + dir.string());
        std::sort(files.begin(), files.end());
        index.classes.push_back(label);
        for (auto& f : files) index.entries.push_back({std::move(f), label});
    }
    return index;
}

} // namespace scattex
