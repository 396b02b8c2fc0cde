#pragma once

#include <array>

#include "scattex/image.hpp"

namespace scattex {

// Equation-backed conversions. rgb_to_ycbcr expects samples in [0, 255];
// every other conversion expects [0, 1]. convert() handles the scaling.
ColorImage rgb_to_ycbcr(const ColorImage& img);
ColorImage rgb_to_hsl(const ColorImage& img);
ColorImage rgb_to_i1i2i3(const ColorImage& img);
ColorImage rgb_to_xyz(const ColorImage& img);
ColorImage rgb_to_opponent(const ColorImage& img);
ColorImage rgb_to_double_opponent(const ColorImage& img);

/// Converts an RGB image (samples in [0, 255] as produced by load_image)
/// to the target space. RGB -> RGB is the identity, sample-exact.
ColorImage convert(const ColorImage& img, ColorSpace target);

/// True for per-pixel linear maps of RGB (no offset, no nonlinearity).
bool is_linear_space(ColorSpace space);

/// The 3x3 (or 4x3) matrix behind a linear space, row-major.
std::vector<std::array<double, 3>> linear_matrix(ColorSpace space);

} // namespace scattex
