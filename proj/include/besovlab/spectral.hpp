#pragma once

#include <complex>
#include <vector>

#include "besovlab/grid.hpp"
#include "besovlab/trig_polynomial.hpp"

namespace besovlab {

// Fourier coefficients under the convention
//   u_hat(k) = integral over the torus of e^{-ikx} u(x) dx,
//   u(x)     = (2*pi)^{-1} sum_k u_hat(k) e^{ikx},
// for k in {-N/2, ..., N/2-1}. Stored in FFT order (non-negative k first).
// No constant may be renormalized downstream: every reported norm depends on
// this choice.
class SpectralCoeffs {
  public:
    explicit SpectralCoeffs(int n) : n_(n), c_(static_cast<size_t>(n), {0.0, 0.0}) {}

    int size() const { return n_; }
    int k_min() const { return -n_ / 2; }
    int k_max_index() const { return n_ / 2 - 1; }

    std::complex<double> at(int k) const { return c_[slot(k)]; }
    void set(int k, std::complex<double> v) { c_[slot(k)] = v; }

    const std::vector<std::complex<double>>& raw() const { return c_; }
    std::vector<std::complex<double>>& raw() { return c_; }

    // Largest |u_hat(k)| over the violation u_hat(-k) - conj(u_hat(k));
    // zero for coefficients of a real field.
    double symmetry_defect() const;

  private:
    size_t slot(int k) const {
        if (k < k_min() || k > k_max_index())
            throw std::domain_error("SpectralCoeffs: frequency out of range");
        return static_cast<size_t>(k >= 0 ? k : k + n_);
    }

    int n_;
    std::vector<std::complex<double>> c_;
};

// u_hat(k) = (2*pi/N) sum_i f(x_i) e^{-ik x_i}; exact (to round-off) for
// trigonometric polynomials with k_max < N/2. Accumulates in extended
// precision so lacunary coefficients far below the field scale survive.
SpectralCoeffs dft_forward(const Field1D& f);

// f(x_i) = (2*pi)^{-1} sum_k u_hat(k) e^{ik x_i}. Rejects coefficient sets
// whose conjugate-symmetry defect exceeds 1e-10 (relative to the largest
// coefficient magnitude when that exceeds 1).
Field1D dft_inverse(const SpectralCoeffs& c);

// Cosine/sine amplitudes of the real field described by c:
//   a_k = Re(u_hat(k))/pi, b_k = -Im(u_hat(k))/pi (k >= 1), a_0 = u_hat(0)/(2*pi).
TrigPolynomial coefficients_to_polynomial(const SpectralCoeffs& c, double drop_below = 0.0);

}  // namespace besovlab
