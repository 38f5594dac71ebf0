#include "besovlab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "besovlab/errors.hpp"
#include "besovlab/fft.hpp"

namespace besovlab {

namespace {
constexpr long double kTwoPiL = 2.0L * 3.14159265358979323846264338327950288L;
}

double SpectralCoeffs::symmetry_defect() const {
    double defect = 0.0;
    // k = -N/2 and k = 0 pair with themselves: imaginary part must vanish.
    defect = std::max(defect, std::abs(at(0).imag()));
    defect = std::max(defect, std::abs(at(k_min()).imag()));
    for (int k = 1; k <= n_ / 2 - 1; ++k)
        defect = std::max(defect, std::abs(at(-k) - std::conj(at(k))));
    return defect;
}

SpectralCoeffs dft_forward(const Field1D& f) {
    const int n = f.size();
    FftPlan<long double> plan(static_cast<size_t>(n));
    std::vector<std::complex<long double>> buf(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) buf[static_cast<size_t>(i)] = {static_cast<long double>(f[i]), 0.0L};
    plan.forward(buf);
    SpectralCoeffs out(n);
    const long double scale = kTwoPiL / static_cast<long double>(n);
    for (int i = 0; i < n; ++i) {
        const auto v = buf[static_cast<size_t>(i)] * scale;
        out.raw()[static_cast<size_t>(i)] = {static_cast<double>(v.real()),
                                             static_cast<double>(v.imag())};
    }
    return out;
}

Field1D dft_inverse(const SpectralCoeffs& c) {
    const int n = c.size();
    double scale_ref = 1.0;
    for (const auto& v : c.raw()) scale_ref = std::max(scale_ref, std::abs(v));
    const double defect = c.symmetry_defect();
    if (defect > 1e-10 * scale_ref)
        throw MalformedCoefficientsError(
            "dft_inverse: conjugate symmetry violated (defect " + std::to_string(defect) + ")");

    FftPlan<long double> plan(static_cast<size_t>(n));
    std::vector<std::complex<long double>> buf(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto v = c.raw()[static_cast<size_t>(i)];
        buf[static_cast<size_t>(i)] = {static_cast<long double>(v.real()),
                                       static_cast<long double>(v.imag())};
    }
    plan.inverse(buf);
    Field1D f{Grid1D(n)};
    for (int i = 0; i < n; ++i)
        f[i] = static_cast<double>(buf[static_cast<size_t>(i)].real() / kTwoPiL);
    return f;
}

TrigPolynomial coefficients_to_polynomial(const SpectralCoeffs& c, double drop_below) {
    constexpr double kPi = 3.14159265358979323846;
    TrigPolynomial p;
    const double a0 = c.at(0).real() / kTwoPi;
    if (std::abs(a0) > drop_below) p.set(0, a0, 0.0);
    for (int k = 1; k <= c.k_max_index(); ++k) {
        const auto v = c.at(k);
        const double a = v.real() / kPi;
        const double b = -v.imag() / kPi;
        if (std::abs(a) > drop_below || std::abs(b) > drop_below) p.set(k, a, b);
    }
    return p;
}

}  // namespace besovlab
