#pragma once

#include <limits>
#include <vector>

#include "besovlab/dyadic.hpp"
#include "besovlab/grid.hpp"
#include "besovlab/lacunary.hpp"
#include "besovlab/trig_polynomial.hpp"

namespace besovlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Regularity s, integrability p, summability r; p, r in [1, inf].
struct BesovIndex {
    double s = 0.0;
    double p = 2.0;
    double r = kInf;
};

// (2*pi)^{(d-1)/p}: the exact factor relating the L^p(T^d) norm of a function
// of x_1 alone to its L^p(T) norm; 1 at p = inf. Applied by the norm
// operations instead of building d-dimensional grids.
double fubini_lift(double p, int dimension);

// L^p(T) norm of a high-frequency cosine:
// (2 * integral_0^pi |cos x|^p dx)^{1/p} for p < inf, 1 at p = inf,
// evaluated through the closed form 2*sqrt(pi)*Gamma((p+1)/2)/Gamma(p/2+1)
// for the integral. Exact for every integer frequency >= 1.
double c0(double p);

// ||u||_{L^p(T)} * fubini_lift(p, d_factor). p = 2 goes through Parseval,
// p = inf through the oversampled+polished sup, other p through converged
// trapezoid quadrature on the gcd-reduced polynomial (ToleranceError when the
// refinement cap is hit).
double lp_norm(const TrigPolynomial& u, double p, int d_factor);

// Grid-path variant: coefficients from the forward DFT of the samples, then
// the same engines. Coefficients below the transform's round-off floor
// (100 eps relative to the largest) are dropped.
double lp_norm(const Field1D& u, double p, int d_factor);

// l^r aggregate over j in {-1, ..., j_max} of 2^{js} ||Delta_j u||_{L^p} with
// the Fubini lift; sup when r = inf. Exact truncation: requires u band-limited
// below (8/3)*2^{j_max}.
double besov_norm_scalar(const TrigPolynomial& u, const BesovIndex& idx, int j_max, int d_factor,
                         const DyadicPartition& partition);

double besov_norm_scalar(const Field1D& u, const BesovIndex& idx, int j_max, int d_factor,
                         const DyadicPartition& partition);

// Vector norm of a shear state: max over velocity components of the scalar
// norm. Component 1 is the constant drift (measured through Delta_{-1},
// giving 2^{-s} (2*pi)^{d/p} |drift|), component 2 the profile, the rest zero.
double besov_norm_shear(const ShearFlowState& state, const BesovIndex& idx, int j_max,
                        const DyadicPartition& partition);

// Same max-over-components norm for the difference a - b (drift difference is
// a constant, profile difference a polynomial). Requires equal dimensions.
double besov_gap_norm(const ShearFlowState& a, const ShearFlowState& b, const BesovIndex& idx,
                      int j_max, const DyadicPartition& partition);

}  // namespace besovlab
