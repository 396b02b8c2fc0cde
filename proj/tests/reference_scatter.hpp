#pragma once

// Test-only reference implementations: naive DFTs and direct spatial-domain
// circular convolutions, independent of the FFT-based pipeline they check.

#include <complex>
#include <vector>

#include "scattex/filterbank.hpp"
#include "scattex/image.hpp"
#include "scattex/scattering.hpp"

namespace scattex::reference {

using Field = std::vector<std::complex<double>>;

/// Naive O(N^2) 2D DFT. sign = -1 forward, +1 inverse (inverse normalized).
Field naive_dft2(const Field& in, std::size_t width, std::size_t height, int sign);

/// Spatial filter of a Fourier-domain multiplier, via the naive inverse DFT.
Field spatial_filter(const std::vector<double>& fourier, std::size_t width, std::size_t height);

/// Direct circular convolution of two spatial fields, O(N^4).
Field direct_convolve(const Field& a, const Field& kernel, std::size_t width, std::size_t height);

/// Full scattering transform computed with direct spatial convolutions only,
/// same padding/subsampling/reduction conventions as scattex::scatter.
std::vector<double> reference_scatter(const ImagePlane& plane, const FilterBank& bank,
                                      int max_order, int oversampling);

/// |plane * psi| by direct convolution.
ImagePlane reference_wavelet_modulus(const ImagePlane& plane, const FilterBank& bank,
                                     PathElement elem);

} // namespace scattex::reference
