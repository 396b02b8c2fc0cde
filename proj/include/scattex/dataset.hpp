#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "scattex/errors.hpp"

namespace scattex {

struct DatasetEntry {
    std::filesystem::path path;
    std::string label;
};

/// Deterministic index of a class-per-directory dataset layout:
/// <root>/<class_name>/<image files>.
struct DatasetIndex {
    std::vector<DatasetEntry> entries; // sorted by (class, filename)
    std::vector<std::string> classes;  // sorted, distinct
};

DatasetIndex index_dataset(const std::filesystem::path& root);

} // namespace scattex
