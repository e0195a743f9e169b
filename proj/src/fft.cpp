#include "fft.hpp"

#include <fftw3.h>

#include <cstring>

#include "errors.hpp"

namespace qhj {

Fft::Fft(std::size_t n) : n_(n) {
    if (n < 2) throw InvalidArgumentError("fft: length must be at least 2");
    buf_in_ = reinterpret_cast<std::complex<double>*>(
        fftw_malloc(sizeof(fftw_complex) * n_));
    buf_out_ = reinterpret_cast<std::complex<double>*>(
        fftw_malloc(sizeof(fftw_complex) * n_));
    plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n_),
                                 reinterpret_cast<fftw_complex*>(buf_in_),
                                 reinterpret_cast<fftw_complex*>(buf_out_),
                                 FFTW_FORWARD, FFTW_ESTIMATE);
    plan_inv_ = fftw_plan_dft_1d(static_cast<int>(n_),
                                 reinterpret_cast<fftw_complex*>(buf_in_),
                                 reinterpret_cast<fftw_complex*>(buf_out_),
                                 FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
    fftw_free(buf_in_);
    fftw_free(buf_out_);
}

void Fft::forward(const std::complex<double>* in, std::complex<double>* out) const {
    std::memcpy(buf_in_, in, sizeof(std::complex<double>) * n_);
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    std::memcpy(out, buf_out_, sizeof(std::complex<double>) * n_);
}

void Fft::inverse(const std::complex<double>* in, std::complex<double>* out) const {
    std::memcpy(buf_in_, in, sizeof(std::complex<double>) * n_);
    fftw_execute(static_cast<fftw_plan>(plan_inv_));
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = buf_out_[i] * scale;
}

void Fft::forward(std::vector<std::complex<double>>& data) const {
    if (data.size() != n_) throw GridMismatchError("fft: length mismatch");
    forward(data.data(), data.data());
}

void Fft::inverse(std::vector<std::complex<double>>& data) const {
    if (data.size() != n_) throw GridMismatchError("fft: length mismatch");
    inverse(data.data(), data.data());
}

}  // namespace qhj
