#include "scattex/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <numbers>
#include <random>

#include "scattex/image.hpp"
#include "scattex/image_io.hpp"

namespace scattex {

namespace {

// Uniform double in [0, 1) from the raw generator output, so the stream is
// identical across standard library implementations.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Tint {
    double r, g, b;
};

constexpr Tint kPalette[] = {
    {1.00, 0.45, 0.35}, {0.40, 1.00, 0.45}, {0.40, 0.55, 1.00}, {1.00, 0.95, 0.40},
    {0.95, 0.45, 1.00}, {0.45, 1.00, 0.95}, {1.00, 0.70, 0.40}, {0.70, 0.70, 0.70},
};

} // namespace

void generate_synthetic_dataset(const SynthParams& params, const std::filesystem::path& out_dir) {
    if (params.classes == 0 || params.per_class == 0 || params.size == 0)
        throw ParameterError("synth: classes, per_class and size must be positive");

    std::mt19937_64 rng(params.seed);
    for (std::size_t c = 0; c < params.classes; ++c) {
        char name[32];
        std::snprintf(name, sizeof(name), "class_%02zu", c);
        const auto class_dir = out_dir / name;
        std::filesystem::create_directories(class_dir);

        const double theta =
            std::numbers::pi * static_cast<double>(c) / static_cast<double>(params.classes);
        const double base_freq = 4.0 + 3.0 * static_cast<double>(c % 3);
        const Tint tint = kPalette[c % std::size(kPalette)];

        for (std::size_t i = 0; i < params.per_class; ++i) {
            const double phase = 2.0 * std::numbers::pi * uniform01(rng);
            const double freq = base_freq * (0.95 + 0.1 * uniform01(rng));
            const double cx = std::cos(theta) * 2.0 * std::numbers::pi * freq /
                              static_cast<double>(params.size);
            const double cy = std::sin(theta) * 2.0 * std::numbers::pi * freq /
                              static_cast<double>(params.size);

            std::vector<ImagePlane> planes(3, ImagePlane(params.size, params.size));
            for (std::size_t y = 0; y < params.size; ++y)
                for (std::size_t x = 0; x < params.size; ++x) {
                    const double wave =
                        0.5 + 0.5 * std::sin(cx * static_cast<double>(x) +
                                             cy * static_cast<double>(y) + phase);
                    const double noise = params.noise * (uniform01(rng) - 0.5);
                    const double level = 40.0 + 180.0 * wave;
                    planes[0].at(x, y) = std::clamp(level * tint.r + noise, 0.0, 255.0);
                    planes[1].at(x, y) = std::clamp(level * tint.g + noise, 0.0, 255.0);
                    planes[2].at(x, y) = std::clamp(level * tint.b + noise, 0.0, 255.0);
                }

            char file[32];
            std::snprintf(file, sizeof(file), "img_%03zu.png", i);
            save_rgb_image(ColorImage(ColorSpace::Rgb, std::move(planes)), class_dir / file);
        }
    }
}

} // namespace scattex
