#include "besovlab/dyadic.hpp"

#include <cmath>
#include <string>

#include "besovlab/errors.hpp"

namespace besovlab {

namespace {

double smooth_step_up(double x) {
    // h(1-x)/(h(1-x)+h(x)) with h(x) = exp(-1/x) on x > 0: equals 1 for
    // x <= 0 and 0 for x >= 1, smooth in between.
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    const double hx = std::exp(-1.0 / x);
    const double h1x = std::exp(-1.0 / (1.0 - x));
    return h1x / (h1x + hx);
}

constexpr double kInnerRadius = 0.75;        // chi == 1 inside
constexpr double kOuterRadius = 4.0 / 3.0;   // chi == 0 outside

}  // namespace

double DyadicPartition::chi(double xi) {
    const double r = std::abs(xi);
    if (r <= kInnerRadius) return 1.0;
    if (r >= kOuterRadius) return 0.0;
    return smooth_step_up((r - kInnerRadius) / (kOuterRadius - kInnerRadius));
}

double DyadicPartition::phi(double xi) { return chi(xi / 2.0) - chi(xi); }

double DyadicPartition::phi_j(int j, double xi) { return phi(std::ldexp(1.0, -j) * xi); }

DyadicPartition::DyadicPartition(int k_max) : k_max_(k_max) {
    if (k_max < 4) throw std::domain_error("DyadicPartition: k_max must be >= 4");
    chi_table_.resize(static_cast<size_t>(k_max) + 1);
    windows_.resize(static_cast<size_t>(k_max) + 1);
    // phi_j(k) != 0 requires 3/4 * 2^j < k < 8/3 * 2^j.
    j_top_ = 0;
    while (0.75 * std::ldexp(1.0, j_top_ + 1) < static_cast<double>(k_max)) ++j_top_;
    for (int k = 0; k <= k_max; ++k) {
        chi_table_[static_cast<size_t>(k)] = chi(static_cast<double>(k));
        Window w;
        if (k > 0) {
            // First candidate block: smallest j with 2^{-j} k < 8/3.
            int j = 0;
            while (std::ldexp(static_cast<double>(k), -j) >= 8.0 / 3.0) ++j;
            w.j_lo = j;
            w.w0 = phi_j(j, static_cast<double>(k));
            w.w1 = phi_j(j + 1, static_cast<double>(k));
        }
        windows_[static_cast<size_t>(k)] = w;
    }
}

double DyadicPartition::multiplier(int j, int k) const {
    const int a = std::abs(k);
    if (a > k_max_)
        throw PartitionRangeError("DyadicPartition: |k| = " + std::to_string(a) +
                                  " exceeds cached k_max = " + std::to_string(k_max_));
    if (j <= -2) return 0.0;
    if (j == -1) return chi_table_[static_cast<size_t>(a)];
    if (a == 0) return 0.0;  // phi_j(0) = 0 for every j >= 0
    const Window& w = windows_[static_cast<size_t>(a)];
    if (j == w.j_lo) return w.w0;
    if (j == w.j_lo + 1) return w.w1;
    return 0.0;
}

double DyadicPartition::unity_defect() const {
    double defect = 0.0;
    for (int k = 0; k <= k_max_; ++k) {
        double s = chi_table_[static_cast<size_t>(k)];
        if (k > 0) {
            const Window& w = windows_[static_cast<size_t>(k)];
            s += w.w0 + w.w1;
        }
        defect = std::max(defect, std::abs(s - 1.0));
    }
    return defect;
}

DyadicPartition build_partition(int k_max) { return DyadicPartition(k_max); }

TrigPolynomial dyadic_block(const TrigPolynomial& u, int j, const DyadicPartition& p) {
    TrigPolynomial out;
    if (j <= -2) return out;
    for (const auto& [k, ab] : u.terms()) {
        const double w = p.multiplier(j, k);
        if (w != 0.0) out.set(k, w * ab.cos_amp, w * ab.sin_amp);
    }
    return out;
}

SpectralCoeffs dyadic_block(const SpectralCoeffs& u, int j, const DyadicPartition& p) {
    SpectralCoeffs out(u.size());
    if (j <= -2) return out;
    for (int k = u.k_min(); k <= u.k_max_index(); ++k) {
        const double w = p.multiplier(j, k);
        if (w != 0.0) out.set(k, w * u.at(k));
    }
    return out;
}

Field1D dyadic_block(const Field1D& u, int j, const DyadicPartition& p) {
    return dft_inverse(dyadic_block(dft_forward(u), j, p));
}

}  // namespace besovlab
