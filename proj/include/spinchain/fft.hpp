#pragma once
// Minimal iterative radix-2 complex FFT.  The NLIE solver only ever needs
// power-of-two sizes, and a self-contained transform keeps the solver free of
// global planner state, so it is safe to run from many threads at once.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spinchain {

class FFT {
  public:
    explicit FFT(std::size_t n) : n_(n) {
        if (n < 2 || (n & (n - 1)) != 0)
            throw std::invalid_argument("FFT: size must be a power of two >= 2");
        rev_.resize(n);
        std::size_t log2n = 0;
        while ((std::size_t{1} << log2n) < n) ++log2n;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < log2n; ++b)
                if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n - 1 - b);
            rev_[i] = r;
        }
        const double pi = 3.14159265358979323846;
        roots_.resize(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k)
            roots_[k] = std::polar(1.0, -2.0 * pi * static_cast<double>(k) / static_cast<double>(n));
    }

    std::size_t size() const { return n_; }

    void forward(std::complex<double>* a) const { transform(a, false); }

    // Inverse transform including the 1/n normalization.
    void inverse(std::complex<double>* a) const {
        transform(a, true);
        double inv = 1.0 / static_cast<double>(n_);
        for (std::size_t i = 0; i < n_; ++i) a[i] *= inv;
    }

  private:
    void transform(std::complex<double>* a, bool inverse) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (i < rev_[i]) std::swap(a[i], a[rev_[i]]);
        for (std::size_t len = 2; len <= n_; len <<= 1) {
            std::size_t stride = n_ / len;
            for (std::size_t blk = 0; blk < n_; blk += len) {
                for (std::size_t j = 0; j < len / 2; ++j) {
                    std::complex<double> w = roots_[j * stride];
                    if (inverse) w = std::conj(w);
                    std::complex<double> u = a[blk + j];
                    std::complex<double> v = a[blk + j + len / 2] * w;
                    a[blk + j] = u + v;
                    a[blk + j + len / 2] = u - v;
                }
            }
        }
    }

    std::size_t n_;
    std::vector<std::size_t> rev_;
    std::vector<std::complex<double>> roots_;
};

}  // namespace spinchain
