#include "scattex/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace scattex {

namespace {

// FFTW planning is not thread-safe; execution via fftw_execute_dft is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

fftw_complex* as_fftw(ComplexField& v) { return reinterpret_cast<fftw_complex*>(v.data()); }

} // namespace

Fft2d::Fft2d(std::size_t width, std::size_t height) : width_(width), height_(height) {
    if (width == 0 || height == 0) throw std::invalid_argument("Fft2d: empty grid");
    // Planned out-of-place and unaligned so fftw_execute_dft accepts any
    // caller-provided buffers.
    ComplexField scratch_in(width * height), scratch_out(width * height);
    std::lock_guard<std::mutex> lock(planner_mutex());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fwd_plan_ = fftw_plan_dft_2d(static_cast<int>(height), static_cast<int>(width),
                                 as_fftw(scratch_in), as_fftw(scratch_out), FFTW_FORWARD, flags);
    inv_plan_ = fftw_plan_dft_2d(static_cast<int>(height), static_cast<int>(width),
                                 as_fftw(scratch_in), as_fftw(scratch_out), FFTW_BACKWARD, flags);
}

Fft2d::~Fft2d() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(inv_plan_));
}

void Fft2d::forward(const ComplexField& in, ComplexField& out) const {
    if (in.size() != width_ * height_) throw std::invalid_argument("Fft2d::forward: size mismatch");
    out.resize(in.size());
    // fftw_execute_dft does not modify the input for out-of-place transforms.
    fftw_execute_dft(static_cast<fftw_plan>(fwd_plan_),
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                     as_fftw(out));
}

void Fft2d::inverse(const ComplexField& in, ComplexField& out) const {
    if (in.size() != width_ * height_) throw std::invalid_argument("Fft2d::inverse: size mismatch");
    out.resize(in.size());
    fftw_execute_dft(static_cast<fftw_plan>(inv_plan_),
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                     as_fftw(out));
    const double norm = 1.0 / static_cast<double>(width_ * height_);
    for (auto& v : out) v *= norm;
}

} // namespace scattex
