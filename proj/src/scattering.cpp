#include "scattex/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scattex/fft.hpp"
#include "scattex/image_io.hpp"

namespace scattex {

namespace {

std::size_t round_up(std::size_t n, std::size_t multiple) {
    return ((n + multiple - 1) / multiple) * multiple;
}

ComplexField to_complex(const ImagePlane& plane) {
    ComplexField out(plane.size());
    for (std::size_t i = 0; i < plane.size(); ++i) out[i] = plane.samples()[i];
    return out;
}

void multiply(const ComplexField& spectrum, const std::vector<double>& filter, ComplexField& out) {
    out.resize(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i) out[i] = spectrum[i] * filter[i];
}

ComplexField modulus_field(const ComplexField& spatial) {
    ComplexField out(spatial.size());
    for (std::size_t i = 0; i < spatial.size(); ++i) out[i] = std::abs(spatial[i]);
    return out;
}

struct ReduceGeometry {
    std::size_t orig_width;
    std::size_t orig_height;
    std::size_t stride;
};

// Smooth with phi, subsample, drop padded samples, spatial mean.
double smooth_and_reduce(const ComplexField& spectrum, const FilterBank& bank, const Fft2d& fft,
                         const ReduceGeometry& geom, ComplexField& scratch_spec,
                         ComplexField& scratch_spatial) {
    multiply(spectrum, bank.phi(), scratch_spec);
    fft.inverse(scratch_spec, scratch_spatial);
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t y = 0; y < geom.orig_height; y += geom.stride)
        for (std::size_t x = 0; x < geom.orig_width; x += geom.stride) {
            sum += scratch_spatial[y * bank.width() + x].real();
            ++count;
        }
    return std::max(0.0, sum / static_cast<double>(count));
}

void check_geometry(const ImagePlane& plane, const FilterBank& bank) {
    const std::size_t coarse = std::size_t{1} << bank.params().scales;
    if (plane.width() < coarse || plane.height() < coarse)
        throw GeometryError("plane " + std::to_string(plane.width()) + "x" +
                            std::to_string(plane.height()) + " smaller than 2^J = " +
                            std::to_string(coarse));
    if (round_up(plane.width(), coarse) != bank.width() ||
        round_up(plane.height(), coarse) != bank.height())
        throw GeometryError("plane does not pad to the bank grid " +
                            std::to_string(bank.width()) + "x" + std::to_string(bank.height()));
}

} // namespace

std::vector<ScatteringPath> enumerate_paths(std::size_t scales, std::size_t angles, int max_order) {
    if (max_order < 0 || max_order > 2)
        throw ParameterError("max_order must be 0, 1 or 2 (three-layer network)");
    std::vector<ScatteringPath> paths;
    paths.push_back({});
    if (max_order >= 1)
        for (std::size_t j = 0; j < scales; ++j)
            for (std::size_t k = 0; k < angles; ++k) paths.push_back({{{j, k}}});
    if (max_order >= 2)
        for (std::size_t j1 = 0; j1 < scales; ++j1)
            for (std::size_t k1 = 0; k1 < angles; ++k1)
                for (std::size_t j2 = j1 + 1; j2 < scales; ++j2)
                    for (std::size_t k2 = 0; k2 < angles; ++k2)
                        paths.push_back({{{j1, k1}, {j2, k2}}});
    return paths;
}

ImagePlane mirror_pad(const ImagePlane& plane, std::size_t multiple) {
    const std::size_t w = plane.width(), h = plane.height();
    const std::size_t wp = round_up(w, multiple), hp = round_up(h, multiple);
    if (wp == w && hp == h) return plane;
    if (wp - w > w || hp - h > h)
        throw GeometryError("mirror padding would exceed the image extent");
    ImagePlane out(wp, hp);
    for (std::size_t y = 0; y < hp; ++y) {
        const std::size_t sy = y < h ? y : 2 * h - 1 - y;
        for (std::size_t x = 0; x < wp; ++x) {
            const std::size_t sx = x < w ? x : 2 * w - 1 - x;
            out.at(x, y) = plane.at(sx, sy);
        }
    }
    return out;
}

ImagePlane wavelet_modulus(const ImagePlane& plane, const FilterBank& bank, PathElement elem) {
    if (plane.width() != bank.width() || plane.height() != bank.height())
        throw GeometryError("wavelet_modulus: plane does not match the bank grid");
    const auto& filt = bank.psi(elem.j, elem.k); // range-checked there
    Fft2d fft(bank.width(), bank.height());
    ComplexField spectrum, product, spatial;
    fft.forward(to_complex(plane), spectrum);
    multiply(spectrum, filt, product);
    fft.inverse(product, spatial);
    std::vector<double> mag(spatial.size());
    for (std::size_t i = 0; i < spatial.size(); ++i) mag[i] = std::abs(spatial[i]);
    return ImagePlane(plane.width(), plane.height(), std::move(mag));
}

ScatteringFeatures scatter(const ImagePlane& plane, const FilterBank& bank, int max_order,
                           int oversampling) {
    if (oversampling < 0) throw ParameterError("oversampling must be >= 0");
    check_geometry(plane, bank);
    const std::size_t J = bank.params().scales, K = bank.params().angles;
    const std::size_t coarse = std::size_t{1} << J;

    ScatteringFeatures features;
    features.paths = enumerate_paths(J, K, max_order);
    features.values.assign(features.paths.size(), 0.0);

    const ImagePlane padded = mirror_pad(plane, coarse);
    const Fft2d fft(bank.width(), bank.height());

    ReduceGeometry geom;
    geom.orig_width = plane.width();
    geom.orig_height = plane.height();
    const std::size_t shift = J >= static_cast<std::size_t>(oversampling)
                                  ? J - static_cast<std::size_t>(oversampling)
                                  : 0;
    geom.stride = std::max<std::size_t>(1, std::size_t{1} << shift);

    ComplexField spectrum0, band, spatial, scratch_spec, scratch_spatial;
    fft.forward(to_complex(padded), spectrum0);

    std::size_t cursor = 0;
    features.values[cursor++] = smooth_and_reduce(spectrum0, bank, fft, geom, scratch_spec,
                                                  scratch_spatial);
    if (max_order == 0) return features;

    // Output slots: order-1 block starts at 1; order-2 entries follow in the
    // same (j1, k1, j2, k2) order the loops below produce.
    std::size_t order2_cursor = 1 + J * K;
    ComplexField spectrum1, band2;
    for (std::size_t j1 = 0; j1 < J; ++j1) {
        for (std::size_t k1 = 0; k1 < K; ++k1) {
            multiply(spectrum0, bank.psi(j1, k1), band);
            fft.inverse(band, spatial);
            const ComplexField u1 = modulus_field(spatial);
            fft.forward(u1, spectrum1);
            features.values[cursor++] =
                smooth_and_reduce(spectrum1, bank, fft, geom, scratch_spec, scratch_spatial);
            if (max_order < 2) continue;
            for (std::size_t j2 = j1 + 1; j2 < J; ++j2) {
                for (std::size_t k2 = 0; k2 < K; ++k2) {
                    multiply(spectrum1, bank.psi(j2, k2), band2);
                    fft.inverse(band2, spatial);
                    const ComplexField u2 = modulus_field(spatial);
                    ComplexField spectrum2;
                    fft.forward(u2, spectrum2);
                    features.values[order2_cursor++] =
                        smooth_and_reduce(spectrum2, bank, fft, geom, scratch_spec, scratch_spatial);
                }
            }
        }
    }
    return features;
}

std::vector<double> scatter_color(const ColorImage& img, const FilterBank& bank, int max_order,
                                  int oversampling) {
    std::vector<double> out;
    for (std::size_t c = 0; c < img.plane_count(); ++c) {
        const ScatteringFeatures f = scatter(img.plane(c), bank, max_order, oversampling);
        out.insert(out.end(), f.values.begin(), f.values.end());
    }
    return out;
}

namespace {

// S_J coefficient map (full resolution, cropped to the original extent).
ImagePlane coefficient_map(const ComplexField& spectrum, const FilterBank& bank, const Fft2d& fft,
                           std::size_t orig_w, std::size_t orig_h) {
    ComplexField spec, spatial;
    multiply(spectrum, bank.phi(), spec);
    fft.inverse(spec, spatial);
    ImagePlane out(orig_w, orig_h);
    for (std::size_t y = 0; y < orig_h; ++y)
        for (std::size_t x = 0; x < orig_w; ++x)
            out.at(x, y) = spatial[y * bank.width() + x].real();
    return out;
}

ImagePlane montage(const std::vector<ImagePlane>& tiles, std::size_t cols) {
    const std::size_t tw = tiles.front().width(), th = tiles.front().height();
    const std::size_t rows = (tiles.size() + cols - 1) / cols;
    ImagePlane out(cols * tw, rows * th);
    for (std::size_t t = 0; t < tiles.size(); ++t) {
        const std::size_t ox = (t % cols) * tw, oy = (t / cols) * th;
        for (std::size_t y = 0; y < th; ++y)
            for (std::size_t x = 0; x < tw; ++x) out.at(ox + x, oy + y) = tiles[t].at(x, y);
    }
    return out;
}

// Numerical noise in an all-but-constant montage would otherwise be
// stretched to full contrast by the affine rescale.
ImagePlane snap_if_flat(ImagePlane plane) {
    const auto [mn, mx] = std::minmax_element(plane.samples().begin(), plane.samples().end());
    if (*mx - *mn <= 1e-9 * std::max(1.0, std::abs(*mx)))
        std::fill(plane.samples().begin(), plane.samples().end(), *mn);
    return plane;
}

} // namespace

void dump_layers(const ImagePlane& plane, const FilterBank& bank,
                 const std::filesystem::path& dir) {
    check_geometry(plane, bank);
    const std::size_t J = bank.params().scales, K = bank.params().angles;
    std::filesystem::create_directories(dir);

    const ImagePlane padded = mirror_pad(plane, std::size_t{1} << J);
    const Fft2d fft(bank.width(), bank.height());
    ComplexField spectrum0, band, spatial;
    fft.forward(to_complex(padded), spectrum0);

    std::vector<ImagePlane> order1, order2;
    {
        std::vector<ImagePlane> order0{
            coefficient_map(spectrum0, bank, fft, plane.width(), plane.height())};
        save_plane_image(snap_if_flat(montage(order0, 1)), dir / "order0.png");
    }
    ComplexField spectrum1, band2;
    for (std::size_t j1 = 0; j1 < J; ++j1)
        for (std::size_t k1 = 0; k1 < K; ++k1) {
            multiply(spectrum0, bank.psi(j1, k1), band);
            fft.inverse(band, spatial);
            fft.forward(modulus_field(spatial), spectrum1);
            order1.push_back(coefficient_map(spectrum1, bank, fft, plane.width(), plane.height()));
            for (std::size_t j2 = j1 + 1; j2 < J; ++j2)
                for (std::size_t k2 = 0; k2 < K; ++k2) {
                    multiply(spectrum1, bank.psi(j2, k2), band2);
                    fft.inverse(band2, spatial);
                    ComplexField spectrum2;
                    fft.forward(modulus_field(spatial), spectrum2);
                    order2.push_back(
                        coefficient_map(spectrum2, bank, fft, plane.width(), plane.height()));
                }
        }
    save_plane_image(snap_if_flat(montage(order1, K)), dir / "order1.png");
    if (!order2.empty())
        save_plane_image(snap_if_flat(montage(order2, K)), dir / "order2.png");
    else
        save_plane_image(ImagePlane(plane.width(), plane.height(), 0.0), dir / "order2.png");
}

std::shared_ptr<const FilterBank> FilterBankCache::for_plane(std::size_t width,
                                                             std::size_t height) {
    const std::size_t coarse = std::size_t{1} << scales_;
    const std::size_t wp = round_up(width, coarse), hp = round_up(height, coarse);
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = banks_[{wp, hp}];
    if (!slot) {
        FilterBankParams params;
        params.scales = scales_;
        params.angles = angles_;
        params.morlet = morlet_;
        params.width = wp;
        params.height = hp;
        slot = std::make_shared<FilterBank>(params);
    }
    return slot;
}

} // namespace scattex
