#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "scattex/colorspace.hpp"

using namespace scattex;

namespace {

ColorImage pixel(double r, double g, double b) {
    return ColorImage(ColorSpace::Rgb,
                      {ImagePlane(1, 1, r), ImagePlane(1, 1, g), ImagePlane(1, 1, b)});
}

std::array<double, 4> values(const ColorImage& img) {
    std::array<double, 4> out{0, 0, 0, 0};
    for (std::size_t c = 0; c < img.plane_count(); ++c) out[c] = img.plane(c).at(0, 0);
    return out;
}

ColorImage random_rgb(std::size_t w, std::size_t h, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ImagePlane> planes(3, ImagePlane(w, h));
    for (auto& p : planes)
        for (auto& v : p.samples()) v = static_cast<double>(rng() % 256);
    return ColorImage(ColorSpace::Rgb, std::move(planes));
}

} // namespace

TEST_CASE("YCbCr anchors") {
    auto v = values(rgb_to_ycbcr(pixel(0, 0, 0)));
    CHECK(v[0] == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(v[1] == doctest::Approx(128.0).epsilon(1e-12));
    CHECK(v[2] == doctest::Approx(128.0).epsilon(1e-12));

    v = values(rgb_to_ycbcr(pixel(128, 128, 128)));
    CHECK(std::abs(v[1] - 128.0) < 1e-9);
    CHECK(std::abs(v[2] - 128.0) < 1e-9);

    // independent scalar evaluation of the row sums at (255,255,255)
    const double y = (65.481 + 128.553 + 24.966) * 255.0 / 256.0 + 16.0;
    v = values(rgb_to_ycbcr(pixel(255, 255, 255)));
    CHECK(std::abs(v[0] - y) < 1e-9);
    CHECK(std::abs(v[0] - 234.1445) < 1e-3);
    CHECK(std::abs(v[1] - 128.0) < 1e-9);
    CHECK(std::abs(v[2] - 128.0) < 1e-9);
}

TEST_CASE("HSL anchors (chromaticity-normalized variant)") {
    auto v = values(rgb_to_hsl(pixel(1, 0, 0)));
    CHECK(std::abs(v[0] - 0.0) < 1e-9);
    CHECK(std::abs(v[1] - 1.0) < 1e-9);
    CHECK(std::abs(v[2] - 0.5) < 1e-9);

    v = values(rgb_to_hsl(pixel(0.7, 0.7, 0.7)));
    CHECK(std::abs(v[0] - 0.0) < 1e-9);
    CHECK(std::abs(v[1] - 0.0) < 1e-9);
    CHECK(std::abs(v[2] - 1.0 / 3.0) < 1e-9);

    v = values(rgb_to_hsl(pixel(0, 1, 0)));
    CHECK(std::abs(v[0] - 120.0) < 1e-9);
    CHECK(std::abs(v[1] - 1.0) < 1e-9);
    CHECK(std::abs(v[2] - 0.5) < 1e-9);

    // R+G+B = 0 is defined, not an error
    v = values(rgb_to_hsl(pixel(0, 0, 0)));
    CHECK(v[0] == 0.0);
    CHECK(v[1] == 0.0);
    CHECK(v[2] == 0.0);
}

TEST_CASE("I1I2I3 anchors") {
    auto v = values(rgb_to_i1i2i3(pixel(1, 0, 0)));
    CHECK(std::abs(v[0] - 1.0 / 3.0) < 1e-9);
    CHECK(std::abs(v[1] - 0.5) < 1e-9);
    CHECK(std::abs(v[2] + 0.25) < 1e-9);

    v = values(rgb_to_i1i2i3(pixel(0.6, 0.6, 0.6)));
    CHECK(std::abs(v[0] - 0.6) < 1e-9);
    CHECK(std::abs(v[1]) < 1e-12);
    CHECK(std::abs(v[2]) < 1e-12);

    v = values(rgb_to_i1i2i3(pixel(0, 1, 1)));
    CHECK(std::abs(v[0] - 2.0 / 3.0) < 1e-9);
    CHECK(std::abs(v[1] + 0.5) < 1e-9);
    CHECK(std::abs(v[2] - 0.25) < 1e-9);
}

TEST_CASE("CIE XYZ anchors (1/0.177 scaling)") {
    auto v = values(rgb_to_xyz(pixel(0, 0, 0)));
    CHECK(v[0] == 0.0);
    CHECK(v[1] == 0.0);
    CHECK(v[2] == 0.0);

    v = values(rgb_to_xyz(pixel(1, 1, 1)));
    for (int c = 0; c < 3; ++c) CHECK(std::abs(v[static_cast<std::size_t>(c)] - 1.0 / 0.177) < 1e-9);

    v = values(rgb_to_xyz(pixel(0, 1, 0)));
    CHECK(std::abs(v[0] - 0.31 / 0.177) < 1e-9);
    CHECK(std::abs(v[1] - 0.812 / 0.177) < 1e-9);
    CHECK(std::abs(v[2] - 0.01 / 0.177) < 1e-9);
}

TEST_CASE("opponent anchors") {
    auto v = values(rgb_to_opponent(pixel(0.5, 0.5, 0.5)));
    CHECK(std::abs(v[0]) < 1e-12);
    CHECK(std::abs(v[1]) < 1e-12);
    CHECK(std::abs(v[2] - std::sqrt(3.0) * 0.5) < 1e-9);

    v = values(rgb_to_opponent(pixel(1, 0, 0)));
    CHECK(std::abs(v[0] - 1.0 / std::sqrt(2.0)) < 1e-9);
    CHECK(std::abs(v[1] - 1.0 / std::sqrt(6.0)) < 1e-9);
    CHECK(std::abs(v[2] - 1.0 / std::sqrt(3.0)) < 1e-9);

    v = values(rgb_to_opponent(pixel(0, 0, 1)));
    CHECK(std::abs(v[0]) < 1e-12);
    CHECK(std::abs(v[1] + 2.0 / std::sqrt(6.0)) < 1e-9);
    CHECK(std::abs(v[2] - 1.0 / std::sqrt(3.0)) < 1e-9);
}

TEST_CASE("double opponent anchors") {
    auto v = values(rgb_to_double_opponent(pixel(0.25, 0.25, 0.25)));
    CHECK(std::abs(v[0]) < 1e-12);
    CHECK(std::abs(v[1]) < 1e-12);
    CHECK(std::abs(v[2]) < 1e-12);
    CHECK(std::abs(v[3] - std::sqrt(3.0) * 0.25) < 1e-9);

    v = values(rgb_to_double_opponent(pixel(1, 0, 0)));
    CHECK(std::abs(v[0] - 1.0 / std::sqrt(2.0)) < 1e-9);
    CHECK(std::abs(v[1] - 2.0 / std::sqrt(6.0)) < 1e-9);
    CHECK(std::abs(v[2] - 1.0 / std::sqrt(6.0)) < 1e-9);
    CHECK(std::abs(v[3] - 1.0 / std::sqrt(3.0)) < 1e-9);

    v = values(rgb_to_double_opponent(pixel(0, 1, 0)));
    CHECK(std::abs(v[0] + 1.0 / std::sqrt(2.0)) < 1e-9);
    CHECK(std::abs(v[1] + 1.0 / std::sqrt(6.0)) < 1e-9);
    CHECK(std::abs(v[2] - 1.0 / std::sqrt(6.0)) < 1e-9);
    CHECK(std::abs(v[3] - 1.0 / std::sqrt(3.0)) < 1e-9);
}

TEST_CASE("convert dispatch") {
    const ColorImage img = random_rgb(4, 3, 11);

    const ColorImage same = convert(img, ColorSpace::Rgb);
    for (std::size_t c = 0; c < 3; ++c) CHECK(same.plane(c).samples() == img.plane(c).samples());

    const ColorImage opp = convert(img, ColorSpace::Opponent);
    ColorImage unit(ColorSpace::Rgb, [&] {
        std::vector<ImagePlane> planes;
        for (std::size_t c = 0; c < 3; ++c) {
            ImagePlane p = img.plane(c);
            for (auto& v : p.samples()) v /= 255.0;
            planes.push_back(std::move(p));
        }
        return planes;
    }());
    const ColorImage direct = rgb_to_opponent(unit);
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < opp.plane(c).size(); ++i)
            CHECK(opp.plane(c).samples()[i] == doctest::Approx(direct.plane(c).samples()[i]));

    CHECK_THROWS_AS(convert(opp, ColorSpace::Hsv), ConversionError);
    CHECK_THROWS_AS(rgb_to_ycbcr(opp), ConversionError);
}

TEST_CASE("gray pixels have exactly-offset chrominance") {
    for (double g : {0.0, 37.0, 128.0, 255.0}) {
        const ColorImage img = pixel(g, g, g);
        const auto ycbcr = values(convert(img, ColorSpace::YCbCr));
        CHECK(std::abs(ycbcr[1] - 128.0) < 1e-12);
        CHECK(std::abs(ycbcr[2] - 128.0) < 1e-12);
        const auto jpeg = values(convert(img, ColorSpace::JpegYCbCr));
        CHECK(std::abs(jpeg[1] - 0.5) < 1e-12);
        CHECK(std::abs(jpeg[2] - 0.5) < 1e-12);
        for (ColorSpace s : {ColorSpace::Yuv, ColorSpace::Yiq, ColorSpace::YPbPr,
                             ColorSpace::YDbDr, ColorSpace::I1I2I3}) {
            const auto v = values(convert(img, s));
            CHECK(std::abs(v[1]) < 1e-12);
            CHECK(std::abs(v[2]) < 1e-12);
        }
        const auto opp = values(convert(img, ColorSpace::Opponent));
        CHECK(std::abs(opp[0]) < 1e-12);
        CHECK(std::abs(opp[1]) < 1e-12);
        const auto dopp = values(convert(img, ColorSpace::DoubleOpponent));
        CHECK(std::abs(dopp[0]) < 1e-12);
        CHECK(std::abs(dopp[1]) < 1e-12);
        CHECK(std::abs(dopp[2]) < 1e-12);
        const auto lab = values(convert(img, ColorSpace::CieLab));
        CHECK(std::abs(lab[1]) < 1e-9);
        CHECK(std::abs(lab[2]) < 1e-9);
    }
}

TEST_CASE("linearity of linear spaces") {
    const ColorImage x = random_rgb(5, 4, 21);
    const ColorImage y = random_rgb(5, 4, 22);
    const double a = 0.37, b = 1.41;

    for (ColorSpace space : all_color_spaces()) {
        if (!is_linear_space(space)) continue;
        CAPTURE(to_tag(space));
        std::vector<ImagePlane> mixed;
        for (std::size_t c = 0; c < 3; ++c) {
            ImagePlane p(x.width(), x.height());
            for (std::size_t i = 0; i < p.size(); ++i)
                p.samples()[i] = a * x.plane(c).samples()[i] + b * y.plane(c).samples()[i];
            mixed.push_back(std::move(p));
        }
        const ColorImage cx = convert(x, space);
        const ColorImage cy = convert(y, space);
        const ColorImage cm = convert(ColorImage(ColorSpace::Rgb, std::move(mixed)), space);
        for (std::size_t c = 0; c < cm.plane_count(); ++c)
            for (std::size_t i = 0; i < cm.plane(c).size(); ++i) {
                const double expect = a * cx.plane(c).samples()[i] + b * cy.plane(c).samples()[i];
                const double scale = std::max(1.0, std::abs(expect));
                CHECK(std::abs(cm.plane(c).samples()[i] - expect) / scale < 1e-10);
            }
    }
}

TEST_CASE("linear spaces round-trip through the matrix (pseudo)inverse") {
    const ColorImage img = random_rgb(6, 3, 33);
    for (ColorSpace space : all_color_spaces()) {
        if (!is_linear_space(space)) continue;
        CAPTURE(to_tag(space));
        const auto rows = linear_matrix(space);
        Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), 3);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < 3; ++c) m(static_cast<Eigen::Index>(r), c) = rows[r][static_cast<std::size_t>(c)];
        const Eigen::MatrixXd pinv = (m.transpose() * m).inverse() * m.transpose();

        const ColorImage out = convert(img, space);
        for (std::size_t i = 0; i < img.plane(0).size(); ++i) {
            Eigen::VectorXd v(static_cast<Eigen::Index>(out.plane_count()));
            for (std::size_t c = 0; c < out.plane_count(); ++c)
                v(static_cast<Eigen::Index>(c)) = out.plane(c).samples()[i];
            const Eigen::Vector3d rgb = pinv * v;
            for (int c = 0; c < 3; ++c)
                CHECK(std::abs(rgb(c) - img.plane(static_cast<std::size_t>(c)).samples()[i] / 255.0) <
                      1e-9);
        }
    }
}

TEST_CASE("hue channels stay in [0, 360)") {
    const ColorImage img = random_rgb(8, 8, 44);
    for (ColorSpace s : {ColorSpace::Hsv, ColorSpace::Hsl, ColorSpace::Hsi, ColorSpace::CieLch}) {
        const ColorImage out = convert(img, s);
        const std::size_t hue_plane = (s == ColorSpace::CieLch) ? 2 : 0;
        for (double v : out.plane(hue_plane).samples()) {
            CHECK(v >= 0.0);
            CHECK(v < 360.0);
        }
    }
}

TEST_CASE("color space tags round-trip") {
    CHECK(all_color_spaces().size() == kColorSpaceCount);
    for (ColorSpace s : all_color_spaces()) CHECK(color_space_from_tag(to_tag(s)) == s);
    CHECK_THROWS_AS(color_space_from_tag("chartreuse"), ConversionError);
}
