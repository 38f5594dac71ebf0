#include "besovlab/besov.hpp"

#include <cmath>
#include <string>

#include "besovlab/errors.hpp"
#include "besovlab/norm_engines.hpp"
#include "besovlab/spectral.hpp"

namespace besovlab {

namespace {

std::vector<SpectralTerm<double>> to_terms(const TrigPolynomial& u) {
    std::vector<SpectralTerm<double>> out;
    out.reserve(u.terms().size());
    for (const auto& [k, ab] : u.terms()) out.push_back({k, ab.cos_amp, ab.sin_amp});
    return out;
}

double torus_lp_norm(const TrigPolynomial& u, double p) {
    if (u.empty()) return 0.0;
    auto terms = to_terms(u);
    if (p == 2.0) return engines::l2_norm(terms);
    if (std::isinf(p)) return engines::sup_norm(terms);
    return engines::lp_quadrature_norm(terms, p);
}

double aggregate(const std::vector<double>& weighted, double r) {
    if (std::isinf(r)) {
        double m = 0.0;
        for (double w : weighted) m = std::max(m, w);
        return m;
    }
    if (r == 1.0) {
        double s = 0.0;
        for (double w : weighted) s += w;
        return s;
    }
    double s = 0.0;
    for (double w : weighted) s += std::pow(w, r);
    return std::pow(s, 1.0 / r);
}

void check_band_limit(int k_max, const BesovIndex&, int j_max, const DyadicPartition& partition) {
    const double limit = (8.0 / 3.0) * std::ldexp(1.0, j_max);
    if (static_cast<double>(k_max) > limit)
        throw ResolutionError("besov_norm: k_max = " + std::to_string(k_max) +
                                  " exceeds band limit (8/3)*2^j_max; raise j_max",
                              k_max);
    if (k_max > partition.k_max())
        throw PartitionRangeError("besov_norm: partition tables cover |k| <= " +
                                  std::to_string(partition.k_max()) + ", field has k_max = " +
                                  std::to_string(k_max));
}

void validate_index(const BesovIndex& idx) {
    if (!(idx.p >= 1.0)) throw std::domain_error("BesovIndex: p must be in [1, inf]");
    if (!(idx.r >= 1.0)) throw std::domain_error("BesovIndex: r must be in [1, inf]");
}

}  // namespace

double fubini_lift(double p, int dimension) {
    if (dimension < 1) throw std::domain_error("fubini_lift: dimension must be >= 1");
    if (std::isinf(p)) return 1.0;
    return std::pow(kTwoPi, static_cast<double>(dimension - 1) / p);
}

double c0(double p) {
    if (!(p >= 1.0)) throw std::domain_error("c0: p must be in [1, inf]");
    if (std::isinf(p)) return 1.0;
    constexpr double kSqrtPi = 1.7724538509055160273;
    const double integral = 2.0 * kSqrtPi * std::tgamma((p + 1.0) / 2.0) / std::tgamma(p / 2.0 + 1.0);
    return std::pow(integral, 1.0 / p);
}

double lp_norm(const TrigPolynomial& u, double p, int d_factor) {
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must be in [1, inf]");
    return torus_lp_norm(u, p) * fubini_lift(p, d_factor);
}

double lp_norm(const Field1D& u, double p, int d_factor) {
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must be in [1, inf]");
    const SpectralCoeffs c = dft_forward(u);
    double scale = 0.0;
    for (const auto& v : c.raw()) scale = std::max(scale, std::abs(v));
    const TrigPolynomial poly = coefficients_to_polynomial(c, 100.0 * 2.22e-16 * scale);
    return torus_lp_norm(poly, p) * fubini_lift(p, d_factor);
}

double besov_norm_scalar(const TrigPolynomial& u, const BesovIndex& idx, int j_max, int d_factor,
                         const DyadicPartition& partition) {
    validate_index(idx);
    if (u.empty()) return 0.0;
    check_band_limit(u.k_max(), idx, j_max, partition);
    std::vector<double> weighted;
    weighted.reserve(static_cast<size_t>(j_max) + 2);
    for (int j = -1; j <= j_max; ++j) {
        const TrigPolynomial block = dyadic_block(u, j, partition);
        if (block.empty()) continue;
        weighted.push_back(std::exp2(static_cast<double>(j) * idx.s) *
                           lp_norm(block, idx.p, d_factor));
    }
    return aggregate(weighted, idx.r);
}

double besov_norm_scalar(const Field1D& u, const BesovIndex& idx, int j_max, int d_factor,
                         const DyadicPartition& partition) {
    validate_index(idx);
    const SpectralCoeffs c = dft_forward(u);
    double scale = 0.0;
    for (const auto& v : c.raw()) scale = std::max(scale, std::abs(v));
    const TrigPolynomial poly = coefficients_to_polynomial(c, 100.0 * 2.22e-16 * scale);
    if (poly.empty()) return 0.0;
    check_band_limit(poly.k_max(), idx, j_max, partition);
    std::vector<double> weighted;
    for (int j = -1; j <= j_max; ++j) {
        const TrigPolynomial block = dyadic_block(poly, j, partition);
        if (block.empty()) continue;
        weighted.push_back(std::exp2(static_cast<double>(j) * idx.s) *
                           lp_norm(block, idx.p, d_factor));
    }
    return aggregate(weighted, idx.r);
}

double besov_norm_shear(const ShearFlowState& state, const BesovIndex& idx, int j_max,
                        const DyadicPartition& partition) {
    const double drift_norm = besov_norm_scalar(TrigPolynomial::constant(state.drift), idx, j_max,
                                                state.dimension, partition);
    const double profile_norm =
        besov_norm_scalar(state.profile, idx, j_max, state.dimension, partition);
    return std::max(drift_norm, profile_norm);
}

double besov_gap_norm(const ShearFlowState& a, const ShearFlowState& b, const BesovIndex& idx,
                      int j_max, const DyadicPartition& partition) {
    if (a.dimension != b.dimension)
        throw std::domain_error("besov_gap_norm: dimensions differ");
    const double drift_norm = besov_norm_scalar(TrigPolynomial::constant(a.drift - b.drift), idx,
                                                j_max, a.dimension, partition);
    const double profile_norm =
        besov_norm_scalar(a.profile - b.profile, idx, j_max, a.dimension, partition);
    return std::max(drift_norm, profile_norm);
}

}  // namespace besovlab
