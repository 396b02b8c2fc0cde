#include "scattex/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace scattex {

void FeatureMatrix::add(std::vector<double> column, std::string label, std::string id) {
    if (columns.empty())
        dims = column.size();
    else if (column.size() != dims)
        throw ParameterError("feature column has " + std::to_string(column.size()) +
                             " dims, expected " + std::to_string(dims));
    columns.push_back(std::move(column));
    labels.push_back(std::move(label));
    sample_ids.push_back(std::move(id));
}

std::vector<std::string> FeatureMatrix::distinct_labels() const {
    std::vector<std::string> out;
    for (const auto& l : labels)
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    return out;
}

void FeatureMatrix::validate() const {
    if (columns.size() != labels.size()) throw ParameterError("labels/columns size mismatch");
    for (const auto& col : columns) {
        if (col.size() != dims) throw ParameterError("inconsistent feature dims");
        for (double v : col)
            if (!std::isfinite(v)) throw ParameterError("non-finite feature value");
    }
}

void write_features_csv(const FeatureMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    char buf[32];
    for (std::size_t i = 0; i < m.columns.size(); ++i) {
        out << (i < m.sample_ids.size() ? m.sample_ids[i] : "") << ',' << m.labels[i];
        for (double v : m.columns[i]) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << ',' << buf;
        }
        out << '\n';
    }
    if (!out) throw IoError("write failure: " + path.string());
}

FeatureMatrix read_features_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path.string());
    FeatureMatrix m;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string id, label, cell;
        if (!std::getline(ss, id, ',') || !std::getline(ss, label, ','))
            throw IoError("malformed feature CSV row in " + path.string());
        std::vector<double> values;
        while (std::getline(ss, cell, ',')) values.push_back(std::stod(cell));
        m.add(std::move(values), std::move(label), std::move(id));
    }
    if (m.columns.empty()) throw IoError("empty feature CSV: " + path.string());
    m.validate();
    return m;
}

} // namespace scattex
