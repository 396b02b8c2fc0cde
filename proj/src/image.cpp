#include "scattex/image.hpp"

#include <cmath>
#include <map>

namespace scattex {

ImagePlane::ImagePlane(std::size_t width, std::size_t height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
    if (samples_.size() != width_ * height_)
        throw ParameterError("ImagePlane: sample count does not match dimensions");
    for (double v : samples_)
        if (!std::isfinite(v))
            throw ParameterError("ImagePlane: non-finite sample");
}

ColorImage::ColorImage(ColorSpace space, std::vector<ImagePlane> planes)
    : space_(space), planes_(std::move(planes)) {
    const std::size_t expected = (space_ == ColorSpace::DoubleOpponent) ? 4 : 3;
    if (planes_.size() != expected)
        throw ParameterError("ColorImage: expected " + std::to_string(expected) + " planes, got " +
                             std::to_string(planes_.size()));
    for (const auto& p : planes_)
        if (p.width() != planes_.front().width() || p.height() != planes_.front().height())
            throw ParameterError("ColorImage: plane dimensions differ");
}

namespace {

const std::map<ColorSpace, std::string> kTags = {
    {ColorSpace::Rgb, "rgb"},
    {ColorSpace::Yuv, "yuv"},
    {ColorSpace::Yiq, "yiq"},
    {ColorSpace::YPbPr, "ypbpr"},
    {ColorSpace::YCbCr, "ycbcr"},
    {ColorSpace::JpegYCbCr, "jpeg-ycbcr"},
    {ColorSpace::YDbDr, "ydbdr"},
    {ColorSpace::Hsv, "hsv"},
    {ColorSpace::Hsl, "hsl"},
    {ColorSpace::Hsi, "hsi"},
    {ColorSpace::I1I2I3, "i1i2i3"},
    {ColorSpace::CieXyz, "cie-xyz"},
    {ColorSpace::CieLuv, "cie-luv"},
    {ColorSpace::CieLch, "cie-lch"},
    {ColorSpace::CieLab, "cie-lab"},
    {ColorSpace::Cat02Lms, "cat02-lms"},
    {ColorSpace::Opponent, "opponent"},
    {ColorSpace::DoubleOpponent, "double-opponent"},
};

} // namespace

std::string to_tag(ColorSpace space) { return kTags.at(space); }

ColorSpace color_space_from_tag(const std::string& tag) {
    for (const auto& [space, name] : kTags)
        if (name == tag) return space;
    throw ConversionError("unknown color space tag: " + tag);
}

std::vector<ColorSpace> all_color_spaces() {
    std::vector<ColorSpace> out;
    out.reserve(kTags.size());
    for (const auto& [space, name] : kTags) out.push_back(space);
    return out;
}

} // namespace scattex
