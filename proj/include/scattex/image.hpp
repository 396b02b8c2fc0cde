#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scattex/errors.hpp"

namespace scattex {

/// One real-valued 2D channel, row-major.
class ImagePlane {
public:
    ImagePlane() = default;
    ImagePlane(std::size_t width, std::size_t height, double fill = 0.0)
        : width_(width), height_(height), samples_(width * height, fill) {}
    ImagePlane(std::size_t width, std::size_t height, std::vector<double> samples);

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t size() const { return samples_.size(); }

    double at(std::size_t x, std::size_t y) const { return samples_[y * width_ + x]; }
    double& at(std::size_t x, std::size_t y) { return samples_[y * width_ + x]; }

    const std::vector<double>& samples() const { return samples_; }
    std::vector<double>& samples() { return samples_; }

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<double> samples_;
};

enum class ColorSpace {
    Rgb,
    Yuv,
    Yiq,
    YPbPr,
    YCbCr,
    JpegYCbCr,
    YDbDr,
    Hsv,
    Hsl,
    Hsi,
    I1I2I3,
    CieXyz,
    CieLuv,
    CieLch,
    CieLab,
    Cat02Lms,
    Opponent,
    DoubleOpponent,
};

inline constexpr std::size_t kColorSpaceCount = 18;

/// Canonical lowercase tag, e.g. "opponent", "double-opponent", "jpeg-ycbcr".
std::string to_tag(ColorSpace space);
ColorSpace color_space_from_tag(const std::string& tag);
std::vector<ColorSpace> all_color_spaces();

/// Ordered planes tagged with their color space. 3 planes, or 4 for
/// double-opponent.
class ColorImage {
public:
    ColorImage(ColorSpace space, std::vector<ImagePlane> planes);

    ColorSpace space() const { return space_; }
    std::size_t width() const { return planes_.front().width(); }
    std::size_t height() const { return planes_.front().height(); }
    std::size_t plane_count() const { return planes_.size(); }

    const ImagePlane& plane(std::size_t i) const { return planes_.at(i); }
    const std::vector<ImagePlane>& planes() const { return planes_; }

private:
    ColorSpace space_;
    std::vector<ImagePlane> planes_;
};

} // namespace scattex
