#include "besovlab/trig_polynomial.hpp"

#include <cmath>

#include "besovlab/errors.hpp"

namespace besovlab {

namespace {
constexpr long double kTwoPiL = 2.0L * 3.14159265358979323846264338327950288L;
}

TrigPolynomial translate(const TrigPolynomial& p, double t) {
    TrigPolynomial out;
    const long double tl = static_cast<long double>(t);
    for (const auto& [k, ab] : p.terms()) {
        if (k == 0) {
            out.set(0, ab.cos_amp, 0.0);
            continue;
        }
        const long double phase = remainderl(static_cast<long double>(k) * tl, kTwoPiL);
        const long double c = cosl(phase);
        const long double s = sinl(phase);
        const long double a = static_cast<long double>(ab.cos_amp);
        const long double b = static_cast<long double>(ab.sin_amp);
        // cos(k(x-t)) = cos(kt)cos(kx) + sin(kt)sin(kx), likewise for sin.
        out.set(k, static_cast<double>(a * c - b * s), static_cast<double>(a * s + b * c));
    }
    return out;
}

TrigPolynomial differentiate(const TrigPolynomial& p) {
    TrigPolynomial out;
    for (const auto& [k, ab] : p.terms()) {
        if (k == 0) continue;
        const double kd = static_cast<double>(k);
        out.set(k, kd * ab.sin_amp, -kd * ab.cos_amp);
    }
    return out;
}

TrigPolynomial heat_damp(const TrigPolynomial& p, double eps, double t) {
    if (eps < 0.0 || t < 0.0)
        throw std::domain_error("heat_damp: eps and t must be non-negative");
    TrigPolynomial out;
    for (const auto& [k, ab] : p.terms()) {
        const double kd = static_cast<double>(k);
        const double factor = std::exp(-eps * kd * kd * t);
        out.set(k, factor * ab.cos_amp, factor * ab.sin_amp);
    }
    return out;
}

Field1D sample(const TrigPolynomial& p, const Grid1D& grid) {
    const int n = grid.size();
    if (2 * p.k_max() >= n)
        throw ResolutionError("sample: grid too coarse for k_max = " + std::to_string(p.k_max()) +
                                  ", requires N > " + std::to_string(2 * p.k_max()),
                              2 * p.k_max() + 1);
    Field1D f(grid);
    for (const auto& [k, ab] : p.terms()) {
        const long double a = static_cast<long double>(ab.cos_amp);
        const long double b = static_cast<long double>(ab.sin_amp);
        // k*x_i = 2*pi*(k*i mod N)/N exactly in integer arithmetic.
        long long m = 0;
        for (int i = 0; i < n; ++i) {
            const long double phase = kTwoPiL * static_cast<long double>(m) / static_cast<long double>(n);
            f[i] += static_cast<double>(a * cosl(phase) + b * sinl(phase));
            m += k;
            if (m >= n) m -= n * (m / n);
        }
    }
    return f;
}

}  // namespace besovlab
