#include "scattex/classifier.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <limits>
#include <random>

namespace scattex {

namespace {

// Bounded draw by rejection, so shuffles do not depend on the standard
// library's unspecified uniform_int_distribution.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

void fisher_yates(std::vector<std::size_t>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[bounded(rng, i)]);
}

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

} // namespace

ClassifierModel fit(const FeatureMatrix& train, std::size_t d) {
    train.validate();
    if (train.columns.empty()) throw ParameterError("fit: no training columns");

    ClassifierModel model;
    model.dims = train.dims;
    model.requested_dim = d;

    for (const auto& label : train.distinct_labels()) {
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < train.labels.size(); ++i)
            if (train.labels[i] == label) cols.push_back(i);

        Eigen::MatrixXd data(static_cast<Eigen::Index>(train.dims),
                             static_cast<Eigen::Index>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c)
            data.col(static_cast<Eigen::Index>(c)) = to_eigen(train.columns[cols[c]]);

        const Eigen::VectorXd mean = data.rowwise().mean();
        data.colwise() -= mean;

        ClassModel cls;
        cls.label = label;
        cls.mean.assign(mean.data(), mean.data() + mean.size());

        if (d > 0 && cols.size() > 1) {
            Eigen::BDCSVD<Eigen::MatrixXd> svd(data, Eigen::ComputeThinU);
            const Eigen::VectorXd& sv = svd.singularValues();
            const double sv_floor = sv.size() > 0 ? sv(0) * 1e-12 : 0.0;
            const std::size_t keep =
                std::min<std::size_t>(d, static_cast<std::size_t>(sv.size()));
            for (std::size_t i = 0; i < keep; ++i) {
                if (sv(static_cast<Eigen::Index>(i)) <= sv_floor) break; // rank deficit
                const Eigen::VectorXd dir = svd.matrixU().col(static_cast<Eigen::Index>(i));
                cls.basis.emplace_back(dir.data(), dir.data() + dir.size());
            }
        }
        model.classes.push_back(std::move(cls));
    }
    return model;
}

double residual_sq(const ClassModel& cls, const std::vector<double>& x) {
    if (x.size() != cls.mean.size()) throw ParameterError("residual_sq: dimension mismatch");
    Eigen::VectorXd centered = to_eigen(x) - to_eigen(cls.mean);
    double projected_sq = 0.0;
    for (const auto& dir : cls.basis) {
        const double coeff = centered.dot(to_eigen(dir));
        projected_sq += coeff * coeff;
    }
    // ||r||^2 = ||y||^2 - ||V^T y||^2 for an orthonormal basis V
    return std::max(0.0, centered.squaredNorm() - projected_sq);
}

std::string predict(const ClassifierModel& model, const std::vector<double>& x) {
    if (x.size() != model.dims) throw ParameterError("predict: dimension mismatch");
    if (model.classes.empty()) throw ParameterError("predict: empty model");
    std::size_t best = 0;
    double best_res = residual_sq(model.classes[0], x);
    for (std::size_t c = 1; c < model.classes.size(); ++c) {
        const double res = residual_sq(model.classes[c], x);
        if (res < best_res) {
            best = c;
            best_res = res;
        }
    }
    return model.classes[best].label;
}

SplitIndices split_indices(const std::vector<std::string>& labels, const SplitSpec& spec,
                           std::size_t split_index) {
    if (spec.train_per_class < 1) throw SplitError("train_per_class must be >= 1");

    // class -> column indices, classes in first-appearance order
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!by_class.count(labels[i])) order.push_back(labels[i]);
        by_class[labels[i]].push_back(i);
    }

    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed),
                      static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(split_index)};
    std::mt19937_64 rng(seq);

    SplitIndices out;
    for (const auto& label : order) {
        auto cols = by_class[label];
        if (spec.train_per_class >= cols.size())
            throw SplitError("class '" + label + "' has " + std::to_string(cols.size()) +
                             " samples, need more than train_per_class = " +
                             std::to_string(spec.train_per_class));
        fisher_yates(cols, rng);
        out.train.insert(out.train.end(), cols.begin(),
                         cols.begin() + static_cast<std::ptrdiff_t>(spec.train_per_class));
        out.test.insert(out.test.end(),
                        cols.begin() + static_cast<std::ptrdiff_t>(spec.train_per_class),
                        cols.end());
    }
    std::sort(out.train.begin(), out.train.end());
    std::sort(out.test.begin(), out.test.end());
    return out;
}

SplitResult evaluate_splits(const FeatureMatrix& features, const SplitSpec& spec, std::size_t d) {
    features.validate();
    if (spec.n_splits < 1) throw SplitError("n_splits must be >= 1");

    SplitResult result;
    for (std::size_t s = 0; s < spec.n_splits; ++s) {
        const SplitIndices idx = split_indices(features.labels, spec, s);

        FeatureMatrix train;
        for (std::size_t i : idx.train) train.add(features.columns[i], features.labels[i]);
        const ClassifierModel model = fit(train, d);

        std::size_t correct = 0;
        for (std::size_t i : idx.test)
            if (predict(model, features.columns[i]) == features.labels[i]) ++correct;
        result.per_split.push_back(100.0 * static_cast<double>(correct) /
                                   static_cast<double>(idx.test.size()));
    }
    double sum = 0.0;
    for (double v : result.per_split) sum += v;
    result.mean_accuracy = sum / static_cast<double>(result.per_split.size());
    return result;
}

} // namespace scattex
