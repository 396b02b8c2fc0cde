#pragma once

#include <cstddef>
#include <vector>

#include "scattex/errors.hpp"

namespace scattex {

struct MorletParams {
    double sigma0 = 0.8;            // envelope width at the finest scale
    double xi0 = 2.356194490192345; // 3*pi/4, center frequency at the finest scale
    double slant = 0.5;             // angular selectivity
};

struct FilterBankParams {
    std::size_t scales = 4; // J; finest averaging scale 2^J
    std::size_t angles = 8; // K; orientations theta_k = k*pi/K over [0, pi)
    MorletParams morlet;
    std::size_t width = 0; // grid the filters are sampled on
    std::size_t height = 0;

    void validate() const;
};

/// Fourier-domain directional wavelet family plus Gaussian low-pass.
/// Filters are real Fourier multipliers sampled on the periodized grid:
/// psi(j, k) for 0 <= j < J (j = 0 finest), 0 <= k < K, and phi at 2^J.
/// Calibrated so the Littlewood-Paley sum never exceeds 1; every psi has
/// zero DC response and phi has unit DC gain.
class FilterBank {
public:
    explicit FilterBank(FilterBankParams params);

    const FilterBankParams& params() const { return params_; }
    std::size_t width() const { return params_.width; }
    std::size_t height() const { return params_.height; }

    const std::vector<double>& psi(std::size_t j, std::size_t k) const;
    const std::vector<double>& phi() const { return phi_; }

private:
    FilterBankParams params_;
    std::vector<std::vector<double>> psi_; // indexed j * K + k
    std::vector<double> phi_;
};

FilterBank build_filterbank(const FilterBankParams& params);

struct LittlewoodPaley {
    double min_response = 0.0;
    double max_response = 0.0;
};

/// Extrema over the frequency grid of
/// A(w) = |phi(w)|^2 + 1/2 sum_{j,k} (|psi_{j,k}(w)|^2 + |psi_{j,k}(-w)|^2).
LittlewoodPaley littlewood_paley(const FilterBank& bank);

} // namespace scattex
