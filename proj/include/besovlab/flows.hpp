#pragma once

#include <optional>

#include "besovlab/grid.hpp"
#include "besovlab/lacunary.hpp"

namespace besovlab {

// Modulation coefficients of one dyadic block at time t, all exact
// trigonometric/exponential evaluations at lambda_j = (11/8)*2^j:
//   euler_vs_data : a_j = cos(lambda_j t) - 1,              b_j = sin(lambda_j t)
//   two_speed     : c_j = cos(lambda_j c1 t) - cos(lambda_j c2 t), same with sin
//   viscous       : e_j = cos(lambda_j t), f_j = sin(lambda_j t),
//                   g_j = exp(-eps lambda_j^2 t) - 1  (in (-1, 0])
enum class ModulationKind { euler_vs_data, two_speed, viscous };

struct BlockModulation {
    ModulationKind kind;
    int j = 0;
    double t = 0.0;
    double first = 0.0;   // a_j / c_j / e_j
    double second = 0.0;  // b_j / d_j / f_j
    double third = 0.0;   // g_j (viscous only)
};

// extra: the second traveling speed for two_speed (the first speed defaults
// to 1), the viscosity for viscous; must be absent for euler_vs_data.
BlockModulation block_modulation(ModulationKind kind, int j, double t,
                                 std::optional<double> extra = std::nullopt,
                                 double base_speed = 1.0);

// (c, h(x_1 - c t), 0, ..., 0): profile translated exactly by c*t. Requires
// an inviscid input state (viscosity tag 0).
ShearFlowState euler_traveling_wave(const ShearFlowState& data, double t);

// The unit-drift damped wave: translate by t, then multiply each frequency k
// by exp(-eps k^2 t). Requires drift 1.
ShearFlowState ns_damped_wave(const ShearFlowState& data, double eps, double t);

// Axis the second velocity component depends on. The traveling shear wave
// has component 2 = h(x_1 - c t); the transverse variant (a static
// non-solution used as a negative control) has component 2 = h(x_2).
enum class ProfileAxis { x1, x2 };

// sup over probe nodes of |du/dt + (u . grad) u| for the declared ansatz, with
// the time derivative taken analytically (differentiate first, then
// translate) and the advective term with exact spatial derivatives (translate
// first, then differentiate). For the traveling wave the two routes cancel to
// round-off; <= 1e-10 certifies the exact-solution property.
double euler_residual(const ShearFlowState& data, double t, const Grid1D& probe,
                      ProfileAxis axis = ProfileAxis::x1);

// sup-norm residual of d/dt f + d/dx f - eps d2/dx2 f = 0 at time t for the
// evolution family selected by the state's own viscosity tag (0 = traveling
// wave, > 0 = damped wave). Probing a traveling wave with eps > 0 leaves the
// missing diffusion term eps * sup|h''|.
double ns_residual(const ShearFlowState& data, double eps, double t, const Grid1D& probe);

}  // namespace besovlab
