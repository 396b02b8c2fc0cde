#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "scattex/classifier.hpp"

using namespace scattex;

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> random_vector(std::size_t dims, std::mt19937_64& rng) {
    std::vector<double> v(dims);
    for (auto& x : v) x = 2.0 * uniform01(rng) - 1.0;
    return v;
}

// Two classes of points on orthogonal 3-dim subspaces of a 10-dim space.
// Class a spans axes 0..2, class b spans axes 3..5.
FeatureMatrix orthogonal_subspace_set(std::size_t points_per_class, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    FeatureMatrix m;
    for (std::size_t i = 0; i < points_per_class; ++i) {
        std::vector<double> v(10, 0.0);
        for (std::size_t d = 0; d < 3; ++d) v[d] = 2.0 * uniform01(rng) - 1.0;
        m.add(std::move(v), "a");
    }
    for (std::size_t i = 0; i < points_per_class; ++i) {
        std::vector<double> v(10, 0.0);
        for (std::size_t d = 3; d < 6; ++d) v[d] = 2.0 * uniform01(rng) - 1.0;
        m.add(std::move(v), "b");
    }
    return m;
}

} // namespace

TEST_CASE("fit with d=0 degenerates to per-class means") {
    FeatureMatrix train;
    train.add({0.0, 0.0}, "a");
    train.add({2.0, 0.0}, "a");
    train.add({10.0, 10.0}, "b");
    train.add({10.0, 12.0}, "b");

    const ClassifierModel model = fit(train, 0);
    REQUIRE(model.classes.size() == 2);
    CHECK(model.classes[0].mean == std::vector<double>{1.0, 0.0});
    CHECK(model.classes[0].basis.empty());
    CHECK(model.classes[1].mean == std::vector<double>{10.0, 11.0});

    CHECK(predict(model, {0.5, 0.5}) == "a");
    CHECK(predict(model, {9.0, 9.0}) == "b");
}

TEST_CASE("zero-variance class yields zero usable directions") {
    FeatureMatrix train;
    train.add({3.0, 4.0, 5.0}, "a");
    train.add({3.0, 4.0, 5.0}, "a");
    train.add({0.0, 0.0, 1.0}, "b");
    train.add({0.0, 1.0, 0.0}, "b");

    const ClassifierModel model = fit(train, 2);
    CHECK(model.classes[0].mean == std::vector<double>{3.0, 4.0, 5.0});
    CHECK(model.classes[0].basis.empty());
    CHECK(model.classes[1].basis.size() == 1); // 2 points give 1 direction
}

TEST_CASE("recovers generating subspaces to tiny principal angle") {
    const FeatureMatrix data = orthogonal_subspace_set(20, 3);
    const ClassifierModel model = fit(data, 3);
    REQUIRE(model.classes.size() == 2);

    for (std::size_t c = 0; c < 2; ++c) {
        REQUIRE(model.classes[c].basis.size() == 3);
        // orthonormality
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                double dot = 0.0;
                for (std::size_t d = 0; d < 10; ++d)
                    dot += model.classes[c].basis[i][d] * model.classes[c].basis[j][d];
                CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
            }
        // span: every basis vector lives entirely on the generating axes
        const std::size_t lo = c == 0 ? 0 : 3;
        for (const auto& dir : model.classes[c].basis) {
            double inside = 0.0;
            for (std::size_t d = lo; d < lo + 3; ++d) inside += dir[d] * dir[d];
            CHECK(std::abs(inside - 1.0) < 1e-6); // cos^2 of principal angles ~ 1
        }
    }

    // 100% training accuracy: residual to own subspace is numerically zero
    for (std::size_t i = 0; i < data.columns.size(); ++i)
        CHECK(predict(model, data.columns[i]) == data.labels[i]);
}

TEST_CASE("predict ties break to the earlier class") {
    FeatureMatrix train;
    train.add({-1.0}, "first");
    train.add({-1.0}, "first");
    train.add({1.0}, "second");
    train.add({1.0}, "second");
    const ClassifierModel model = fit(train, 0);
    CHECK(predict(model, {0.0}) == "first"); // equidistant
    CHECK_THROWS_AS(predict(model, {0.0, 0.0}), ParameterError);
}

TEST_CASE("predict is invariant under global rotation and shift") {
    std::mt19937_64 rng(9);
    FeatureMatrix train;
    for (int i = 0; i < 15; ++i) train.add(random_vector(6, rng), i % 3 == 0 ? "a" : "b");
    std::vector<std::vector<double>> queries;
    for (int i = 0; i < 20; ++i) queries.push_back(random_vector(6, rng));

    const ClassifierModel base_model = fit(train, 2);

    // random orthogonal transform via QR
    Eigen::MatrixXd gauss(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) gauss(i, j) = 2.0 * uniform01(rng) - 1.0;
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(gauss).householderQ();
    const std::vector<double> shift = random_vector(6, rng);

    auto transform = [&](const std::vector<double>& v, bool rotate) {
        Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(v.data(), 6);
        if (rotate) x = q * x;
        std::vector<double> out(x.data(), x.data() + 6);
        if (!rotate)
            for (std::size_t d = 0; d < 6; ++d) out[d] += shift[d];
        return out;
    };

    for (const bool rotate : {true, false}) {
        FeatureMatrix moved;
        for (std::size_t i = 0; i < train.columns.size(); ++i)
            moved.add(transform(train.columns[i], rotate), train.labels[i]);
        const ClassifierModel moved_model = fit(moved, 2);
        for (const auto& query : queries)
            CHECK(predict(moved_model, transform(query, rotate)) == predict(base_model, query));
    }
}

TEST_CASE("evaluate_splits basics") {
    std::mt19937_64 rng(4);

    SUBCASE("separable clusters score 100") {
        FeatureMatrix features;
        for (int i = 0; i < 12; ++i) {
            auto v = random_vector(8, rng);
            features.add(v, "near");
            for (auto& x : v) x += 100.0;
            features.add(v, "far");
        }
        const SplitResult r = evaluate_splits(features, {6, 4, 123}, 5);
        CHECK(r.mean_accuracy == 100.0);
        REQUIRE(r.per_split.size() == 4);
    }

    SUBCASE("identical features collapse to the first class by tie-break") {
        FeatureMatrix features;
        for (int i = 0; i < 10; ++i) features.add({1.0, 2.0}, "a");
        for (int i = 0; i < 10; ++i) features.add({1.0, 2.0}, "b");
        for (int i = 0; i < 10; ++i) features.add({1.0, 2.0}, "c");
        const SplitResult r = evaluate_splits(features, {5, 3, 7}, 0);
        // everything predicted "a"; test sets have 5 of each class
        for (double v : r.per_split) CHECK(v == doctest::Approx(100.0 / 3.0));
    }

    SUBCASE("reproducible for a fixed seed") {
        FeatureMatrix features;
        for (int i = 0; i < 14; ++i) features.add(random_vector(4, rng), i % 2 ? "a" : "b");
        const SplitResult r1 = evaluate_splits(features, {4, 6, 99}, 2);
        const SplitResult r2 = evaluate_splits(features, {4, 6, 99}, 2);
        CHECK(r1.per_split == r2.per_split);
    }

    SUBCASE("split error names the class that is too small") {
        FeatureMatrix features;
        features.add({1.0}, "tiny");
        features.add({2.0}, "tiny");
        for (int i = 0; i < 9; ++i) features.add({3.0}, "big");
        CHECK_THROWS_WITH_AS(evaluate_splits(features, {2, 2, 0}, 0),
                             doctest::Contains("tiny"), SplitError);
    }
}

TEST_CASE("split indices partition every class") {
    std::vector<std::string> labels;
    for (int i = 0; i < 9; ++i) labels.push_back("a");
    for (int i = 0; i < 7; ++i) labels.push_back("b");
    const SplitIndices idx = split_indices(labels, {4, 1, 42}, 0);
    CHECK(idx.train.size() == 8);
    CHECK(idx.test.size() == 8);
    std::vector<bool> seen(labels.size(), false);
    for (std::size_t i : idx.train) seen[i] = true;
    for (std::size_t i : idx.test) {
        CHECK(!seen[i]);
        seen[i] = true;
    }
    for (bool s : seen) CHECK(s);

    // different split index, different partition (overwhelmingly likely)
    const SplitIndices other = split_indices(labels, {4, 1, 42}, 1);
    CHECK(idx.train != other.train);
}
