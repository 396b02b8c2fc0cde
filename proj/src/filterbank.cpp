#include "scattex/filterbank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace scattex {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kReplicas = 2; // aliasing replicas summed per axis

// Periodized anisotropic Gaussian centered at xi along direction theta,
// sampled at frequency bin (a, b) of a width x height grid.
double periodized_gabor(std::size_t a, std::size_t b, std::size_t width, std::size_t height,
                        double sigma, double slant, double xi, double cos_t, double sin_t) {
    // wrap base frequency into (-pi, pi]
    double wx = kTwoPi * static_cast<double>(a) / static_cast<double>(width);
    double wy = kTwoPi * static_cast<double>(b) / static_cast<double>(height);
    if (wx > std::numbers::pi) wx -= kTwoPi;
    if (wy > std::numbers::pi) wy -= kTwoPi;

    double sum = 0.0;
    for (int rx = -kReplicas; rx <= kReplicas; ++rx) {
        for (int ry = -kReplicas; ry <= kReplicas; ++ry) {
            const double ox = wx + kTwoPi * rx;
            const double oy = wy + kTwoPi * ry;
            const double along = ox * cos_t + oy * sin_t - xi;
            const double across = -ox * sin_t + oy * cos_t;
            sum += std::exp(-0.5 * sigma * sigma *
                            (along * along + across * across / (slant * slant)));
        }
    }
    return sum;
}

std::size_t negated_bin(std::size_t a, std::size_t n) { return a == 0 ? 0 : n - a; }

} // namespace

void FilterBankParams::validate() const {
    if (scales < 1 || angles < 1) throw ParameterError("filter bank needs J >= 1 and K >= 1");
    if (morlet.sigma0 <= 0 || morlet.slant <= 0) throw ParameterError("sigma0 and slant must be positive");
    if (morlet.xi0 <= 0 || morlet.xi0 >= std::numbers::pi)
        throw ParameterError("xi0 must lie in (0, pi)");
    const std::size_t coarse = std::size_t{1} << scales;
    if (width == 0 || height == 0 || coarse > std::min(width, height))
        throw GeometryError("grid " + std::to_string(width) + "x" + std::to_string(height) +
                            " too small for 2^J = " + std::to_string(coarse));
}

FilterBank::FilterBank(FilterBankParams params) : params_(params) {
    params_.validate();
    const std::size_t w = params_.width, h = params_.height, n = w * h;
    const std::size_t J = params_.scales, K = params_.angles;

    // phi: periodized Gaussian at scale 2^J, unit DC gain.
    const double sigma_j_max = params_.morlet.sigma0 * static_cast<double>(std::size_t{1} << J);
    phi_.resize(n);
    for (std::size_t b = 0; b < h; ++b)
        for (std::size_t a = 0; a < w; ++a)
            phi_[b * w + a] =
                periodized_gabor(a, b, w, h, sigma_j_max, 1.0, 0.0, 1.0, 0.0);
    const double phi_dc = phi_[0];
    for (auto& v : phi_) v /= phi_dc;

    // psi: Morlet = Gabor minus the DC-matched Gaussian envelope.
    psi_.resize(J * K, std::vector<double>(n));
    for (std::size_t j = 0; j < J; ++j) {
        const double sigma = params_.morlet.sigma0 * static_cast<double>(std::size_t{1} << j);
        const double xi = params_.morlet.xi0 / static_cast<double>(std::size_t{1} << j);
        for (std::size_t k = 0; k < K; ++k) {
            const double theta = static_cast<double>(k) * std::numbers::pi / static_cast<double>(K);
            const double ct = std::cos(theta), st = std::sin(theta);
            auto& filt = psi_[j * K + k];
            double gab_dc = 0.0, env_dc = 0.0;
            std::vector<double> envelope(n);
            for (std::size_t b = 0; b < h; ++b) {
                for (std::size_t a = 0; a < w; ++a) {
                    const double gab =
                        periodized_gabor(a, b, w, h, sigma, params_.morlet.slant, xi, ct, st);
                    const double env =
                        periodized_gabor(a, b, w, h, sigma, params_.morlet.slant, 0.0, ct, st);
                    filt[b * w + a] = gab;
                    envelope[b * w + a] = env;
                    if (a == 0 && b == 0) {
                        gab_dc = gab;
                        env_dc = env;
                    }
                }
            }
            const double beta = gab_dc / env_dc;
            for (std::size_t i = 0; i < n; ++i) filt[i] -= beta * envelope[i];
        }
    }

    // Calibrate psi so the Littlewood-Paley sum stays <= 1 pointwise.
    double scale_sq = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < h; ++b) {
        for (std::size_t a = 0; a < w; ++a) {
            const std::size_t i = b * w + a;
            const std::size_t i_neg = negated_bin(b, h) * w + negated_bin(a, w);
            double band = 0.0;
            for (const auto& filt : psi_)
                band += 0.5 * (filt[i] * filt[i] + filt[i_neg] * filt[i_neg]);
            if (band <= 0.0) continue;
            const double headroom = 1.0 - phi_[i] * phi_[i];
            if (headroom <= 0.0) continue;
            scale_sq = std::min(scale_sq, headroom / band);
        }
    }
    const double scale = std::isfinite(scale_sq) ? std::sqrt(scale_sq) : 1.0;
    for (auto& filt : psi_)
        for (auto& v : filt) v *= scale;
}

const std::vector<double>& FilterBank::psi(std::size_t j, std::size_t k) const {
    if (j >= params_.scales || k >= params_.angles)
        throw ParameterError("psi index out of range");
    return psi_[j * params_.angles + k];
}

FilterBank build_filterbank(const FilterBankParams& params) { return FilterBank(params); }

LittlewoodPaley littlewood_paley(const FilterBank& bank) {
    const std::size_t w = bank.width(), h = bank.height();
    LittlewoodPaley lp{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t b = 0; b < h; ++b) {
        for (std::size_t a = 0; a < w; ++a) {
            const std::size_t i = b * w + a;
            const std::size_t i_neg = negated_bin(b, h) * w + negated_bin(a, w);
            double total = bank.phi()[i] * bank.phi()[i];
            for (std::size_t j = 0; j < bank.params().scales; ++j)
                for (std::size_t k = 0; k < bank.params().angles; ++k) {
                    const auto& filt = bank.psi(j, k);
                    total += 0.5 * (filt[i] * filt[i] + filt[i_neg] * filt[i_neg]);
                }
            lp.min_response = std::min(lp.min_response, total);
            lp.max_response = std::max(lp.max_response, total);
        }
    }
    return lp;
}

} // namespace scattex
