#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qhj {

/* Thin RAII wrapper over FFTW double-precision complex transforms of a fixed
 * length. Plans are created with FFTW_ESTIMATE so results do not depend on
 * planner timing. Forward means e^{-i k x} convention, unnormalized; the
 * inverse divides by n. */
class Fft {
public:
    explicit Fft(std::size_t n);
    ~Fft();

    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    std::size_t size() const { return n_; }

    void forward(const std::complex<double>* in, std::complex<double>* out) const;
    void inverse(const std::complex<double>* in, std::complex<double>* out) const;

    void forward(std::vector<std::complex<double>>& data) const;
    void inverse(std::vector<std::complex<double>>& data) const;

    /* Signed FFT frequency index: 0,1,...,n/2-1,-n/2,...,-1. */
    static long freq_index(std::size_t i, std::size_t n) {
        return i < (n + 1) / 2 ? static_cast<long>(i)
                               : static_cast<long>(i) - static_cast<long>(n);
    }

private:
    std::size_t n_;
    void* plan_fwd_;
    void* plan_inv_;
    std::complex<double>* buf_in_;
    std::complex<double>* buf_out_;
};

}  // namespace qhj
