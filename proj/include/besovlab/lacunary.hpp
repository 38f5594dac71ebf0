#pragma once

#include <string>

#include "besovlab/trig_polynomial.hpp"

namespace besovlab {

enum class WeightRule {
    uniform,          // w_j = 1
    quadratic_decay,  // w_j = j^{-2}
};

std::string to_string(WeightRule r);
WeightRule weight_rule_from_string(const std::string& s);

// Lacunary frequency lambda_j = (11/8)*2^j = 11*2^{j-3}, an exact integer for
// j >= 3. Each such frequency lands in exactly one dyadic block (block j).
long long lacunary_frequency(int j);

// Profile sum_{j=3}^{J} w_j 2^{-js} cos(lambda_j x): one cosine per dyadic
// block, which makes every Besov norm block-diagonal.
struct LacunaryProfile {
    double s = 1.0;
    int truncation = 16;  // J
    WeightRule rule = WeightRule::uniform;
    TrigPolynomial poly;

    int k_max() const { return poly.k_max(); }
};

// J >= 3 required; frequencies are stored as exact integers.
LacunaryProfile build_profile(double s, int truncation, WeightRule rule);

// Shear velocity field (c, h(x_1 - ...), 0, ..., 0) on the d-torus:
// component 1 is the constant drift, component 2 depends on x_1 only, all
// others vanish. Divergence-free by construction and carries the identically
// zero pressure. The viscosity tag records which equation family the state
// evolves under (0 = Euler traveling wave, > 0 = damped wave).
struct ShearFlowState {
    int dimension = 2;
    double drift = 1.0;
    TrigPolynomial profile;
    double viscosity = 0.0;
    double time = 0.0;

    static constexpr double pressure = 0.0;
};

// State at t = 0 with the given drift; throws for d < 2.
ShearFlowState shear_initial_data(const LacunaryProfile& profile, int dimension, double drift);

}  // namespace besovlab
