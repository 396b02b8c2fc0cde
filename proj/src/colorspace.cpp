#include "scattex/colorspace.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace scattex {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;
const double kSqrt6 = std::sqrt(6.0);

using Mat3 = std::array<std::array<double, 3>, 3>;

// Luma row shared by the luminance-chrominance family (BT.601).
constexpr std::array<double, 3> kLuma601 = {0.299, 0.587, 0.114};

// U = 0.492 (B - Y), V = 0.877 (R - Y); rows derived from the luma row so
// they sum to zero at machine precision.
const Mat3 kYuv = {{kLuma601,
                    {-0.492 * 0.299, -0.492 * 0.587, 0.492 * 0.886},
                    {0.877 * 0.701, -0.877 * 0.587, -0.877 * 0.114}}};
const Mat3 kYiq = {{kLuma601, {0.595716, -0.274453, -0.321263}, {0.211456, -0.522591, 0.311135}}};
const Mat3 kYPbPr = {{kLuma601, {-0.168736, -0.331264, 0.5}, {0.5, -0.418688, -0.081312}}};
const Mat3 kYDbDr = {{kLuma601, {-0.450, -0.883, 1.333}, {-1.333, 1.116, 0.217}}};

const Mat3 kI1I2I3 = {{{1.0 / 3, 1.0 / 3, 1.0 / 3}, {0.5, 0.0, -0.5}, {-0.25, 0.5, -0.25}}};

// CIE XYZ with the 1/0.177 prefactor.
const Mat3 kXyzPaper = {{{0.49 / 0.177, 0.31 / 0.177, 0.20 / 0.177},
                         {0.177 / 0.177, 0.812 / 0.177, 0.011 / 0.177},
                         {0.00 / 0.177, 0.01 / 0.177, 0.99 / 0.177}}};

// Standard RGB->XYZ (BT.709 primaries, D65 white), used by the CIE L*
// spaces and CAT02 LMS.
const Mat3 kXyzD65 = {{{0.4124564, 0.3575761, 0.1804375},
                       {0.2126729, 0.7151522, 0.0721750},
                       {0.0193339, 0.1191920, 0.9503041}}};

const Mat3 kCat02 = {{{0.7328, 0.4296, -0.1624},
                      {-0.7036, 1.6975, 0.0061},
                      {0.0030, 0.0136, 0.9834}}};

const Mat3 kOpponent = {{{1 / kSqrt2, -1 / kSqrt2, 0.0},
                         {1 / kSqrt6, 1 / kSqrt6, -2 / kSqrt6},
                         {1 / kSqrt3, 1 / kSqrt3, 1 / kSqrt3}}};

const std::array<std::array<double, 3>, 4> kDoubleOpponent = {{{1 / kSqrt2, -1 / kSqrt2, 0.0},
                                                               {2 / kSqrt6, -1 / kSqrt6, -1 / kSqrt6},
                                                               {1 / kSqrt6, 1 / kSqrt6, -2 / kSqrt6},
                                                               {1 / kSqrt3, 1 / kSqrt3, 1 / kSqrt3}}};

Mat3 matmul(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

const Mat3 kCat02Lms = matmul(kCat02, kXyzD65);

void require_rgb(const ColorImage& img) {
    if (img.space() != ColorSpace::Rgb)
        throw ConversionError("source image is not RGB (got " + to_tag(img.space()) + ")");
}

template <typename PixelFn>
ColorImage map_pixels(const ColorImage& img, ColorSpace target, std::size_t out_planes, PixelFn fn) {
    std::vector<ImagePlane> planes(out_planes, ImagePlane(img.width(), img.height()));
    std::vector<double> out(out_planes);
    for (std::size_t i = 0; i < img.width() * img.height(); ++i) {
        fn(img.plane(0).samples()[i], img.plane(1).samples()[i], img.plane(2).samples()[i], out.data());
        for (std::size_t c = 0; c < out_planes; ++c) planes[c].samples()[i] = out[c];
    }
    return ColorImage(target, std::move(planes));
}

ColorImage apply_mat3(const ColorImage& img, ColorSpace target, const Mat3& m) {
    return map_pixels(img, target, 3, [&m](double r, double g, double b, double* out) {
        for (int i = 0; i < 3; ++i) out[i] = m[i][0] * r + m[i][1] * g + m[i][2] * b;
    });
}

double deg_mod360(double h) {
    h = std::fmod(h, 360.0);
    return h < 0 ? h + 360.0 : h;
}

void xyz_d65_pixel(double r, double g, double b, double& x, double& y, double& z) {
    x = kXyzD65[0][0] * r + kXyzD65[0][1] * g + kXyzD65[0][2] * b;
    y = kXyzD65[1][0] * r + kXyzD65[1][1] * g + kXyzD65[1][2] * b;
    z = kXyzD65[2][0] * r + kXyzD65[2][1] * g + kXyzD65[2][2] * b;
}

// D65 white = image of RGB (1,1,1), so white maps to L=100 exactly.
const double kWhiteX = kXyzD65[0][0] + kXyzD65[0][1] + kXyzD65[0][2];
const double kWhiteY = kXyzD65[1][0] + kXyzD65[1][1] + kXyzD65[1][2];
const double kWhiteZ = kXyzD65[2][0] + kXyzD65[2][1] + kXyzD65[2][2];

double lab_f(double t) {
    constexpr double eps = 216.0 / 24389.0;
    constexpr double kappa = 24389.0 / 27.0;
    return t > eps ? std::cbrt(t) : (kappa * t + 16.0) / 116.0;
}

void lab_pixel(double r, double g, double b, double* out) {
    double x, y, z;
    xyz_d65_pixel(r, g, b, x, y, z);
    const double fx = lab_f(x / kWhiteX), fy = lab_f(y / kWhiteY), fz = lab_f(z / kWhiteZ);
    out[0] = 116.0 * fy - 16.0;
    out[1] = 500.0 * (fx - fy);
    out[2] = 200.0 * (fy - fz);
}

void luv_pixel(double r, double g, double b, double* out) {
    double x, y, z;
    xyz_d65_pixel(r, g, b, x, y, z);
    const double L = 116.0 * lab_f(y / kWhiteY) - 16.0;
    const double denom = x + 15.0 * y + 3.0 * z;
    const double wdenom = kWhiteX + 15.0 * kWhiteY + 3.0 * kWhiteZ;
    const double up = denom > 0 ? 4.0 * x / denom : 0.0;
    const double vp = denom > 0 ? 9.0 * y / denom : 0.0;
    const double upn = 4.0 * kWhiteX / wdenom;
    const double vpn = 9.0 * kWhiteY / wdenom;
    out[0] = L;
    out[1] = denom > 0 ? 13.0 * L * (up - upn) : 0.0;
    out[2] = denom > 0 ? 13.0 * L * (vp - vpn) : 0.0;
}

void lch_pixel(double r, double g, double b, double* out) {
    double lab[3];
    lab_pixel(r, g, b, lab);
    out[0] = lab[0];
    out[1] = std::hypot(lab[1], lab[2]);
    out[2] = out[1] > 0 ? deg_mod360(std::atan2(lab[2], lab[1]) * 180.0 / std::numbers::pi) : 0.0;
}

void hsv_pixel(double r, double g, double b, double* out) {
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    const double c = mx - mn;
    double h = 0.0;
    if (c > 0) {
        if (mx == r)
            h = 60.0 * (g - b) / c;
        else if (mx == g)
            h = 60.0 * (b - r) / c + 120.0;
        else
            h = 60.0 * (r - g) / c + 240.0;
        h = deg_mod360(h);
    }
    out[0] = h;
    out[1] = mx > 0 ? c / mx : 0.0;
    out[2] = mx;
}

void hsi_pixel(double r, double g, double b, double* out) {
    const double intensity = (r + g + b) / 3.0;
    const double mn = std::min({r, g, b});
    double h = 0.0;
    const double num = 0.5 * ((r - g) + (r - b));
    const double den = std::sqrt((r - g) * (r - g) + (r - b) * (g - b));
    if (den > 0) {
        h = std::acos(std::clamp(num / den, -1.0, 1.0)) * 180.0 / std::numbers::pi;
        if (b > g) h = 360.0 - h;
    }
    out[0] = h;
    out[1] = intensity > 0 ? 1.0 - mn / intensity : 0.0;
    out[2] = intensity;
}

// Chromaticity-normalized HSL: hue and saturation are computed on
// r/(R+G+B) etc., and L = (max+min)/2 of the normalized components.
void hsl_pixel(double R, double G, double B, double* out) {
    const double sum = R + G + B;
    if (sum <= 0) {
        out[0] = out[1] = out[2] = 0.0;
        return;
    }
    const double r = R / sum, g = G / sum, b = B / sum;
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    double h;
    if (mx == mn)
        h = 0.0;
    else if (mx == r && g >= b)
        h = 60.0 * (g - b) / (mx - mn);
    else if (mx == r)
        h = 60.0 * (g - b) / (mx - mn) + 360.0;
    else if (mx == g)
        h = 60.0 * (b - r) / (mx - mn) + 120.0;
    else
        h = 60.0 * (r - g) / (mx - mn) + 240.0;
    const double l = 0.5 * (mx + mn);
    double s;
    if (l <= 0 || mx == mn)
        s = 0.0;
    else if (l <= 0.5)
        s = (mx - mn) / (2.0 * l);
    else
        s = (mx - mn) / (2.0 - 2.0 * l);
    out[0] = h;
    out[1] = s;
    out[2] = l;
}

void jpeg_ycbcr_pixel(double r, double g, double b, double* out) {
    out[0] = kLuma601[0] * r + kLuma601[1] * g + kLuma601[2] * b;
    out[1] = kYPbPr[1][0] * r + kYPbPr[1][1] * g + kYPbPr[1][2] * b + 0.5;
    out[2] = kYPbPr[2][0] * r + kYPbPr[2][1] * g + kYPbPr[2][2] * b + 0.5;
}

ColorImage scale_rgb(const ColorImage& img, double factor) {
    return map_pixels(img, ColorSpace::Rgb, 3, [factor](double r, double g, double b, double* out) {
        out[0] = r * factor;
        out[1] = g * factor;
        out[2] = b * factor;
    });
}

} // namespace

ColorImage rgb_to_ycbcr(const ColorImage& img) {
    require_rgb(img);
    return map_pixels(img, ColorSpace::YCbCr, 3, [](double r, double g, double b, double* out) {
        out[0] = (65.481 * r + 128.553 * g + 24.966 * b) / 256.0 + 16.0;
        out[1] = (-37.797 * r - 74.203 * g + 112.0 * b) / 256.0 + 128.0;
        out[2] = (112.0 * r - 93.786 * g - 18.214 * b) / 256.0 + 128.0;
    });
}

ColorImage rgb_to_hsl(const ColorImage& img) {
    require_rgb(img);
    return map_pixels(img, ColorSpace::Hsl, 3, hsl_pixel);
}

ColorImage rgb_to_i1i2i3(const ColorImage& img) {
    require_rgb(img);
    return apply_mat3(img, ColorSpace::I1I2I3, kI1I2I3);
}

ColorImage rgb_to_xyz(const ColorImage& img) {
    require_rgb(img);
    return apply_mat3(img, ColorSpace::CieXyz, kXyzPaper);
}

ColorImage rgb_to_opponent(const ColorImage& img) {
    require_rgb(img);
    return apply_mat3(img, ColorSpace::Opponent, kOpponent);
}

ColorImage rgb_to_double_opponent(const ColorImage& img) {
    require_rgb(img);
    return map_pixels(img, ColorSpace::DoubleOpponent, 4, [](double r, double g, double b, double* out) {
        for (int i = 0; i < 4; ++i)
            out[i] = kDoubleOpponent[i][0] * r + kDoubleOpponent[i][1] * g + kDoubleOpponent[i][2] * b;
    });
}

ColorImage convert(const ColorImage& img, ColorSpace target) {
    require_rgb(img);
    switch (target) {
        case ColorSpace::Rgb:
            return img;
        case ColorSpace::YCbCr:
            return rgb_to_ycbcr(img); // consumes [0, 255] directly
        default:
            break;
    }
    const ColorImage unit = scale_rgb(img, 1.0 / 255.0);
    switch (target) {
        case ColorSpace::Yuv: return apply_mat3(unit, target, kYuv);
        case ColorSpace::Yiq: return apply_mat3(unit, target, kYiq);
        case ColorSpace::YPbPr: return apply_mat3(unit, target, kYPbPr);
        case ColorSpace::JpegYCbCr: return map_pixels(unit, target, 3, jpeg_ycbcr_pixel);
        case ColorSpace::YDbDr: return apply_mat3(unit, target, kYDbDr);
        case ColorSpace::Hsv: return map_pixels(unit, target, 3, hsv_pixel);
        case ColorSpace::Hsl: return rgb_to_hsl(unit);
        case ColorSpace::Hsi: return map_pixels(unit, target, 3, hsi_pixel);
        case ColorSpace::I1I2I3: return rgb_to_i1i2i3(unit);
        case ColorSpace::CieXyz: return rgb_to_xyz(unit);
        case ColorSpace::CieLuv: return map_pixels(unit, target, 3, luv_pixel);
        case ColorSpace::CieLch: return map_pixels(unit, target, 3, lch_pixel);
        case ColorSpace::CieLab: return map_pixels(unit, target, 3, lab_pixel);
        case ColorSpace::Cat02Lms: return apply_mat3(unit, target, kCat02Lms);
        case ColorSpace::Opponent: return rgb_to_opponent(unit);
        case ColorSpace::DoubleOpponent: return rgb_to_double_opponent(unit);
        default:
            throw ConversionError("unsupported conversion target: " + to_tag(target));
    }
}

bool is_linear_space(ColorSpace space) {
    switch (space) {
        case ColorSpace::Yuv:
        case ColorSpace::Yiq:
        case ColorSpace::YPbPr:
        case ColorSpace::YDbDr:
        case ColorSpace::I1I2I3:
        case ColorSpace::CieXyz:
        case ColorSpace::Cat02Lms:
        case ColorSpace::Opponent:
        case ColorSpace::DoubleOpponent:
            return true;
        default:
            return false;
    }
}

std::vector<std::array<double, 3>> linear_matrix(ColorSpace space) {
    auto rows3 = [](const Mat3& m) {
        return std::vector<std::array<double, 3>>{m[0], m[1], m[2]};
    };
    switch (space) {
        case ColorSpace::Yuv: return rows3(kYuv);
        case ColorSpace::Yiq: return rows3(kYiq);
        case ColorSpace::YPbPr: return rows3(kYPbPr);
        case ColorSpace::YDbDr: return rows3(kYDbDr);
        case ColorSpace::I1I2I3: return rows3(kI1I2I3);
        case ColorSpace::CieXyz: return rows3(kXyzPaper);
        case ColorSpace::Cat02Lms: return rows3(kCat02Lms);
        case ColorSpace::Opponent: return rows3(kOpponent);
        case ColorSpace::DoubleOpponent:
            return {kDoubleOpponent[0], kDoubleOpponent[1], kDoubleOpponent[2], kDoubleOpponent[3]};
        default:
            throw ParameterError("not a linear space: " + to_tag(space));
    }
}

} // namespace scattex
