#pragma once

#include <cstdint>
#include <filesystem>

namespace scattex {

struct SynthParams {
    std::size_t classes = 4;
    std::size_t per_class = 30;
    std::size_t size = 64;
    std::uint64_t seed = 1;
    double noise = 12.0; // additive noise amplitude on the 0..255 scale
};

/// Writes a class-per-directory dataset of oriented sinusoidal gratings.
/// Class identity = (orientation, frequency, color tint); per-image phase
/// and noise vary. Deterministic for a fixed seed.
void generate_synthetic_dataset(const SynthParams& params, const std::filesystem::path& out_dir);

} // namespace scattex
