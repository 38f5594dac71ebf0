#pragma once

#include "besovlab/trig_polynomial.hpp"

namespace besovlab {

// Independent oracle for d/dt v + d/dx v - eps d2/dx2 v = 0: per-frequency
// integrating factor exp(-(ik + eps k^2) T) applied in complex arithmetic.
// Deliberately shares no multiplier code with translate()/heat_damp() so the
// two routes cross-check each other.
TrigPolynomial solve_advection_diffusion_1d(const TrigPolynomial& profile, double eps, double T);

}  // namespace besovlab
