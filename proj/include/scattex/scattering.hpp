#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "scattex/filterbank.hpp"
#include "scattex/image.hpp"

namespace scattex {

struct PathElement {
    std::size_t j = 0; // scale index, 0 = finest
    std::size_t k = 0; // angle index

    friend auto operator<=>(const PathElement&, const PathElement&) = default;
};

/// Frequency-decreasing path: scale indices strictly increase along it.
struct ScatteringPath {
    std::vector<PathElement> elements;

    std::size_t order() const { return elements.size(); }
    friend auto operator<=>(const ScatteringPath&, const ScatteringPath&) = default;
};

/// Canonical path set: the empty path, then order-1 sorted by (j, k), then
/// order-2 sorted by (j1, k1, j2, k2) with j1 < j2.
/// Count = 1 + J*K + K^2 * J*(J-1)/2 for max_order = 2.
std::vector<ScatteringPath> enumerate_paths(std::size_t scales, std::size_t angles, int max_order);

struct ScatteringFeatures {
    std::vector<ScatteringPath> paths;
    std::vector<double> values; // spatial mean of S_J[p], one per path
};

/// |plane * psi_{j,k}| via frequency-domain multiplication. The plane must
/// already match the bank grid exactly.
ImagePlane wavelet_modulus(const ImagePlane& plane, const FilterBank& bank, PathElement elem);

/// Mirror (symmetric) extension of the right/bottom edges up to the next
/// multiple of `multiple` in each dimension.
ImagePlane mirror_pad(const ImagePlane& plane, std::size_t multiple);

/// Full scattering transform of one channel: pad, cascade wavelet-modulus
/// along every path, average with phi, subsample at stride
/// 2^(J - oversampling), drop padded samples, and reduce each map to its
/// spatial mean. The bank must live on the padded grid of the plane.
ScatteringFeatures scatter(const ImagePlane& plane, const FilterBank& bank, int max_order,
                           int oversampling);

/// Per-channel scattering, concatenated in plane order.
std::vector<double> scatter_color(const ColorImage& img, const FilterBank& bank, int max_order,
                                  int oversampling);

/// Writes one montage PNG per order (order0.png, order1.png, order2.png) of
/// the S_J coefficient maps of a single channel.
void dump_layers(const ImagePlane& plane, const FilterBank& bank,
                 const std::filesystem::path& dir);

/// Builds and shares filter banks keyed by padded grid size.
class FilterBankCache {
public:
    FilterBankCache(std::size_t scales, std::size_t angles, MorletParams morlet = {})
        : scales_(scales), angles_(angles), morlet_(morlet) {}

    /// Bank for the padded grid of a width x height plane.
    std::shared_ptr<const FilterBank> for_plane(std::size_t width, std::size_t height);

    std::size_t scales() const { return scales_; }
    std::size_t angles() const { return angles_; }

private:
    std::size_t scales_;
    std::size_t angles_;
    MorletParams morlet_;
    std::mutex mutex_;
    std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const FilterBank>> banks_;
};

} // namespace scattex
