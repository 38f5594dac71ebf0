#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#ifdef __SIZEOF_FLOAT128__
#include <quadmath.h>
#endif

namespace besovlab {

namespace detail {

template <typename R>
inline void sincos_frac(long long num, long long den, R& s, R& c) {
    // sin/cos of -2*pi*num/den, evaluated in (at least) the target precision.
    const long double angle =
        -2.0L * 3.14159265358979323846264338327950288L * static_cast<long double>(num) /
        static_cast<long double>(den);
    s = static_cast<R>(sinl(angle));
    c = static_cast<R>(cosl(angle));
}

#ifdef __SIZEOF_FLOAT128__
template <>
inline void sincos_frac<__float128>(long long num, long long den, __float128& s, __float128& c) {
    const __float128 angle = -2.0Q * M_PIq * static_cast<__float128>(num) / static_cast<__float128>(den);
    s = sinq(angle);
    c = cosq(angle);
}
#endif

}  // namespace detail

// Iterative radix-2 complex FFT, power-of-two sizes only. Unnormalized:
// forward computes sum_i a_i e^{-2*pi*i*j*k/n}, inverse the conjugate sum.
// Templated over the real type so the same kernel runs in double, extended
// and (where needed) quad precision.
template <typename R>
class FftPlan {
  public:
    using Cplx = std::complex<R>;

    explicit FftPlan(size_t n) : n_(n) {
        if (n < 2 || (n & (n - 1)) != 0)
            throw std::domain_error("FftPlan: size must be a power of two >= 2");
        twiddle_.resize(n / 2);
        for (size_t k = 0; k < n / 2; ++k) {
            R s, c;
            detail::sincos_frac<R>(static_cast<long long>(k), static_cast<long long>(n), s, c);
            twiddle_[k] = Cplx(c, s);
        }
        bitrev_.resize(n);
        size_t log2n = 0;
        while ((size_t{1} << log2n) < n) ++log2n;
        for (size_t i = 0; i < n; ++i) {
            size_t r = 0;
            for (size_t b = 0; b < log2n; ++b)
                if (i & (size_t{1} << b)) r |= size_t{1} << (log2n - 1 - b);
            bitrev_[i] = r;
        }
    }

    size_t size() const { return n_; }

    // cos(2*pi*k/n), sin(2*pi*k/n) for 0 <= k < n, from the twiddle table
    // (twiddle holds e^{-2*pi*i*k/n} for k < n/2; the other half differs by -1).
    R cos_frac(size_t k) const {
        return k < n_ / 2 ? twiddle_[k].real() : -twiddle_[k - n_ / 2].real();
    }
    R sin_frac(size_t k) const {
        return k < n_ / 2 ? -twiddle_[k].imag() : twiddle_[k - n_ / 2].imag();
    }

    void forward(Cplx* a) const { run(a, false); }
    void inverse(Cplx* a) const { run(a, true); }

    void forward(std::vector<Cplx>& a) const { checked(a), run(a.data(), false); }
    void inverse(std::vector<Cplx>& a) const { checked(a), run(a.data(), true); }

  private:
    void checked(const std::vector<Cplx>& a) const {
        if (a.size() != n_) throw std::domain_error("FftPlan: buffer size mismatch");
    }

    void run(Cplx* a, bool inv) const {
        const size_t n = n_;
        for (size_t i = 0; i < n; ++i) {
            const size_t j = bitrev_[i];
            if (i < j) std::swap(a[i], a[j]);
        }
        for (size_t len = 2; len <= n; len <<= 1) {
            const size_t stride = n / len;
            for (size_t blk = 0; blk < n; blk += len) {
                for (size_t j = 0; j < len / 2; ++j) {
                    Cplx w = twiddle_[j * stride];
                    if (inv) w = std::conj(w);
                    const Cplx u = a[blk + j];
                    const Cplx v = a[blk + j + len / 2] * w;
                    a[blk + j] = u + v;
                    a[blk + j + len / 2] = u - v;
                }
            }
        }
    }

    size_t n_;
    std::vector<Cplx> twiddle_;
    std::vector<size_t> bitrev_;
};

}  // namespace besovlab
