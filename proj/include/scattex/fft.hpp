#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace scattex {

using ComplexField = std::vector<std::complex<double>>;

/// 2D DFT of a row-major width x height field. Plans are created once per
/// instance; execution is thread-safe across instances.
class Fft2d {
public:
    Fft2d(std::size_t width, std::size_t height);
    ~Fft2d();
    Fft2d(const Fft2d&) = delete;
    Fft2d& operator=(const Fft2d&) = delete;

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }

    void forward(const ComplexField& in, ComplexField& out) const;
    /// Inverse transform, normalized by 1/(width*height).
    void inverse(const ComplexField& in, ComplexField& out) const;

private:
    std::size_t width_;
    std::size_t height_;
    void* fwd_plan_;
    void* inv_plan_;
};

} // namespace scattex
