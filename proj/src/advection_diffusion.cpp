#include "besovlab/advection_diffusion.hpp"

#include <complex>
#include <stdexcept>

namespace besovlab {

TrigPolynomial solve_advection_diffusion_1d(const TrigPolynomial& profile, double eps, double T) {
    if (eps < 0.0 || T < 0.0)
        throw std::domain_error("solve_advection_diffusion_1d: eps and T must be >= 0");
    TrigPolynomial out;
    for (const auto& [k, ab] : profile.terms()) {
        if (k == 0) {
            out.set(0, ab.cos_amp, 0.0);
            continue;
        }
        // Mode a cos(kx) + b sin(kx) = Re[(a - ib) e^{ikx}] evolves by
        // z -> z * exp(-(ik + eps k^2) T).
        const long double kd = static_cast<long double>(k);
        const std::complex<long double> z(ab.cos_amp, -ab.sin_amp);
        const std::complex<long double> rate(-static_cast<long double>(eps) * kd * kd *
                                                 static_cast<long double>(T),
                                             -kd * static_cast<long double>(T));
        const std::complex<long double> w = z * std::exp(rate);
        out.set(k, static_cast<double>(w.real()), static_cast<double>(-w.imag()));
    }
    return out;
}

}  // namespace besovlab
