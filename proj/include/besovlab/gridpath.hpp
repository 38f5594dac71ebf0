#pragma once

#include <string>

#include "besovlab/besov.hpp"
#include "besovlab/dyadic.hpp"
#include "besovlab/trig_polynomial.hpp"

namespace besovlab {

// Grid-path norms for the experiment cross-checks: the difference field is
// sampled on 2^log2_points nodes, pushed through a forward FFT, weighted by
// the cached dyadic multipliers, and the per-block norms are taken from the
// weighted bins. Runs in extended precision and rises to quad when the block
// weights 2^{js} amplify the transform's round-off floor past the comparison
// tolerance; the floor that remains is reported.
struct GridPathResult {
    double full_norm = 0.0;
    double block_norm = 0.0;  // weighted value at the distinguished block
    std::string precision;    // "long double" or "float128"
    int points = 0;
    double noise_floor_rel = 0.0;  // predicted relative floor of full_norm
};

GridPathResult grid_besov_gap(const TrigPolynomial& profile_diff, double drift_diff,
                              const BesovIndex& idx, int j_max, int d_factor, int block_n,
                              const DyadicPartition& partition, int log2_points = 18,
                              double exact_hint = 0.0);

}  // namespace besovlab
