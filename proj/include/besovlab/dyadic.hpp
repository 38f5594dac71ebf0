#pragma once

#include <vector>

#include "besovlab/grid.hpp"
#include "besovlab/spectral.hpp"
#include "besovlab/trig_polynomial.hpp"

namespace besovlab {

// Dyadic partition of unity on frequency space:
//   chi   smooth, == 1 on |xi| <= 3/4, == 0 on |xi| >= 4/3,
//   phi(xi) = chi(xi/2) - chi(xi),  supp phi in {3/4 <= |xi| <= 8/3},
//   phi == 1 on 4/3 <= |xi| <= 3/2,  phi_j(xi) = phi(2^{-j} xi),
// with chi + sum_{j>=0} phi_j == 1 by telescoping. chi is built from the
// C-infinity step h(1-x)/(h(1-x)+h(x)), h(x) = exp(-1/x) for x > 0, with the
// transition rescaled onto [3/4, 4/3]; the construction is reproducible
// bit-for-bit and takes the exact values 0/1 outside the transition zone.
//
// Integer-frequency multiplier values phi_j(k) are cached up to k_max. For
// each k at most two j have phi_j(k) != 0 (the support window spans fewer
// than two octaves), so the cache stores that pair per frequency.
class DyadicPartition {
  public:
    explicit DyadicPartition(int k_max);

    int k_max() const { return k_max_; }
    // Largest j with phi_j(k) != 0 for some cached |k| <= k_max.
    int j_top() const { return j_top_; }

    // Continuous evaluations (|xi| is used; both are radial).
    static double chi(double xi);
    static double phi(double xi);
    static double phi_j(int j, double xi);

    // Cached integer-frequency multiplier for block j >= -1 (j = -1 is chi).
    // Throws PartitionRangeError when |k| exceeds the cache.
    double multiplier(int j, int k) const;

    // max_k |chi(k) + sum_j phi_j(k) - 1| over the cached range.
    double unity_defect() const;

  private:
    struct Window {
        int j_lo = 0;         // first block with phi_j(k) != 0
        double w0 = 0.0;      // phi_{j_lo}(k)
        double w1 = 0.0;      // phi_{j_lo+1}(k)
    };

    int k_max_;
    int j_top_;
    std::vector<double> chi_table_;     // chi(k), k = 0..k_max
    std::vector<Window> windows_;       // per k = 0..k_max
};

// Builds the partition with multiplier tables covering |k| <= k_max.
DyadicPartition build_partition(int k_max);

// Periodic dyadic block: each frequency k of u is weighted by chi(k) when
// j = -1 and by phi_j(k) when j >= 0; the result is zero for j <= -2.
TrigPolynomial dyadic_block(const TrigPolynomial& u, int j, const DyadicPartition& p);

// Grid-path block: forward DFT, multiplier on |k|, inverse DFT.
Field1D dyadic_block(const Field1D& u, int j, const DyadicPartition& p);

// Multiplier applied in place on spectral data.
SpectralCoeffs dyadic_block(const SpectralCoeffs& u, int j, const DyadicPartition& p);

}  // namespace besovlab
