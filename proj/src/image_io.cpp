#include "scattex/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

namespace scattex {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

bool has_png_signature(std::FILE* f) {
    unsigned char sig[8];
    if (std::fread(sig, 1, 8, f) != 8) return false;
    return png_sig_cmp(sig, 0, 8) == 0;
}

ColorImage load_png(const std::filesystem::path& path) {
    FilePtr file(std::fopen(path.string().c_str(), "rb"));
    if (!file) throw DecodeError("cannot open " + path.string());
    if (!has_png_signature(file.get()))
        throw DecodeError("not a PNG file: " + path.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("libpng init failure");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("corrupt PNG: " + path.string());
    }
    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (bit_depth != 8 ||
        (color_type != PNG_COLOR_TYPE_RGB && color_type != PNG_COLOR_TYPE_RGB_ALPHA)) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError("expected 8-bit RGB PNG: " + path.string());
    }
    if (color_type == PNG_COLOR_TYPE_RGB_ALPHA) png_set_strip_alpha(png);
    png_read_update_info(png, info);

    std::vector<unsigned char> row(static_cast<std::size_t>(width) * 3);
    std::vector<ImagePlane> planes(3, ImagePlane(width, height));
    for (png_uint_32 y = 0; y < height; ++y) {
        png_read_row(png, row.data(), nullptr);
        for (png_uint_32 x = 0; x < width; ++x)
            for (int c = 0; c < 3; ++c)
                planes[c].at(x, y) = static_cast<double>(row[x * 3 + c]);
    }
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return ColorImage(ColorSpace::Rgb, std::move(planes));
}

void skip_ppm_whitespace(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

ColorImage load_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DecodeError("cannot open " + path.string());
    std::string magic(2, '\0');
    in.read(magic.data(), 2);
    if (magic != "P6" && magic != "P3") throw FormatError("unsupported PPM magic in " + path.string());

    long width = 0, height = 0, maxval = 0;
    skip_ppm_whitespace(in);
    in >> width;
    skip_ppm_whitespace(in);
    in >> height;
    skip_ppm_whitespace(in);
    in >> maxval;
    if (!in || width <= 0 || height <= 0) throw DecodeError("bad PPM header: " + path.string());
    if (maxval != 255) throw FormatError("expected 8-bit PPM (maxval 255): " + path.string());

    std::vector<ImagePlane> planes(3, ImagePlane(static_cast<std::size_t>(width),
                                                 static_cast<std::size_t>(height)));
    if (magic == "P6") {
        in.get(); // single whitespace after maxval
        std::vector<unsigned char> buf(static_cast<std::size_t>(width) * height * 3);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (!in) throw DecodeError("truncated PPM: " + path.string());
        std::size_t i = 0;
        for (long y = 0; y < height; ++y)
            for (long x = 0; x < width; ++x)
                for (int c = 0; c < 3; ++c)
                    planes[c].at(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) = buf[i++];
    } else {
        for (long y = 0; y < height; ++y)
            for (long x = 0; x < width; ++x)
                for (int c = 0; c < 3; ++c) {
                    long v = -1;
                    in >> v;
                    if (!in || v < 0 || v > 255) throw DecodeError("bad PPM sample: " + path.string());
                    planes[c].at(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) =
                        static_cast<double>(v);
                }
    }
    return ColorImage(ColorSpace::Rgb, std::move(planes));
}

void write_png(const std::filesystem::path& path, std::size_t width, std::size_t height,
               int color_type, int channels, const std::vector<unsigned char>& pixels) {
    FilePtr file(std::fopen(path.string().c_str(), "wb"));
    if (!file) throw IoError("cannot write " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw IoError("libpng init failure");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("PNG write failure: " + path.string());
    }
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                 color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (std::size_t y = 0; y < height; ++y)
        png_write_row(png, const_cast<png_bytep>(pixels.data() + y * width * channels));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

} // namespace

ColorImage load_image(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw DecodeError("no such file: " + path.string());
    const std::string ext = path.extension().string();
    if (ext == ".ppm") return load_ppm(path);
    return load_png(path);
}

void save_plane_image(const ImagePlane& plane, const std::filesystem::path& path) {
    const auto [mn_it, mx_it] = std::minmax_element(plane.samples().begin(), plane.samples().end());
    const double mn = *mn_it, mx = *mx_it;
    std::vector<unsigned char> pixels(plane.size());
    if (mx - mn <= 0.0) {
        std::fill(pixels.begin(), pixels.end(), static_cast<unsigned char>(128));
    } else {
        const double scale = 255.0 / (mx - mn);
        for (std::size_t i = 0; i < plane.size(); ++i)
            pixels[i] = static_cast<unsigned char>(
                std::lround(std::clamp((plane.samples()[i] - mn) * scale, 0.0, 255.0)));
    }
    write_png(path, plane.width(), plane.height(), PNG_COLOR_TYPE_GRAY, 1, pixels);
}

void save_rgb_image(const ColorImage& img, const std::filesystem::path& path) {
    if (img.plane_count() != 3) throw ParameterError("save_rgb_image: need 3 planes");
    std::vector<unsigned char> pixels(img.width() * img.height() * 3);
    std::size_t i = 0;
    for (std::size_t y = 0; y < img.height(); ++y)
        for (std::size_t x = 0; x < img.width(); ++x)
            for (int c = 0; c < 3; ++c)
                pixels[i++] = static_cast<unsigned char>(
                    std::lround(std::clamp(img.plane(static_cast<std::size_t>(c)).at(x, y), 0.0, 255.0)));
    write_png(path, img.width(), img.height(), PNG_COLOR_TYPE_RGB, 3, pixels);
}

void write_planes_f32(const std::vector<ImagePlane>& planes, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& plane : planes) {
        const std::uint32_t dims[2] = {static_cast<std::uint32_t>(plane.width()),
                                       static_cast<std::uint32_t>(plane.height())};
        out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
        for (double v : plane.samples()) {
            const float f = static_cast<float>(v);
            out.write(reinterpret_cast<const char*>(&f), sizeof(f));
        }
    }
    if (!out) throw IoError("write failure: " + path.string());
}

std::vector<ImagePlane> read_planes_f32(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::vector<ImagePlane> planes;
    for (;;) {
        std::uint32_t dims[2];
        in.read(reinterpret_cast<char*>(dims), sizeof(dims));
        if (in.gcount() == 0 && in.eof()) break;
        if (!in) throw IoError("truncated .f32 header: " + path.string());
        std::vector<double> samples(static_cast<std::size_t>(dims[0]) * dims[1]);
        for (auto& v : samples) {
            float f;
            in.read(reinterpret_cast<char*>(&f), sizeof(f));
            if (!in) throw IoError("truncated .f32 data: " + path.string());
            v = f;
        }
        planes.emplace_back(dims[0], dims[1], std::move(samples));
    }
    if (planes.empty()) throw IoError("empty .f32 file: " + path.string());
    return planes;
}

} // namespace scattex
