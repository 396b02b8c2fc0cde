#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "scattex/errors.hpp"

namespace scattex {

/// Column-per-sample feature matrix with one class label per column.
struct FeatureMatrix {
    std::size_t dims = 0;
    std::vector<std::vector<double>> columns;
    std::vector<std::string> labels;
    std::vector<std::string> sample_ids; // optional, e.g. image paths

    void add(std::vector<double> column, std::string label, std::string id = {});
    std::vector<std::string> distinct_labels() const; // sorted by first appearance
    void validate() const;
};

/// CSV rows: id,class,v1,...,vN (no header).
void write_features_csv(const FeatureMatrix& m, const std::filesystem::path& path);
FeatureMatrix read_features_csv(const std::filesystem::path& path);

} // namespace scattex
