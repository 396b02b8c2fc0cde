#pragma once

#include <filesystem>
#include <vector>

#include "scattex/image.hpp"

namespace scattex {

/// Decodes an 8-bit RGB PNG or PPM (P3/P6). Samples land in [0, 255]
/// unscaled, space tag = RGB.
ColorImage load_image(const std::filesystem::path& path);

/// Writes an 8-bit grayscale PNG. Samples are rescaled min->0, max->255;
/// a constant plane maps to mid-gray 128.
void save_plane_image(const ImagePlane& plane, const std::filesystem::path& path);

/// Writes an 8-bit RGB PNG from three planes already in [0, 255].
void save_rgb_image(const ColorImage& img, const std::filesystem::path& path);

/// .f32 plane record: u32 width, u32 height (little-endian), then
/// width*height little-endian f32 samples, row-major. A file may hold
/// several consecutive records (one per channel).
void write_planes_f32(const std::vector<ImagePlane>& planes, const std::filesystem::path& path);
std::vector<ImagePlane> read_planes_f32(const std::filesystem::path& path);

} // namespace scattex
