#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "besovlab/grid.hpp"

namespace besovlab {

// Pseudo-spectral incompressible Navier-Stokes on the 2-torus in vorticity
// form, used as an independent numerical oracle for the closed-form shear
// solutions. Pressure is eliminated entirely by the Biot-Savart inversion and
// the velocity stays divergence-free to round-off.

struct SolverConfig2D {
    int n = 128;               // grid points per axis, power of two in [32, 512]
    double dt = 1e-3;          // fixed step, > 0
    double eps = 0.0;          // viscosity, >= 0 (diffusion handled exactly)
    double t_final = 0.1;      // <= 1 (desk-scale cap)
    std::vector<double> output_times;  // defaults to {t_final}

    void validate() const;
};

// Spectral vorticity (per-point normalization: omega(x) = sum w_k e^{ikx})
// plus the explicitly carried mean velocity, which the equations conserve.
struct VorticityState2D {
    int n = 0;
    double time = 0.0;
    std::vector<std::complex<double>> omega_hat;  // FFT layout, n*n entries
    std::array<double, 2> mean_velocity{0.0, 0.0};
};

struct Ns2dResult {
    std::vector<VorticityState2D> states;  // one per requested output time
    double cfl_number = 0.0;               // dt * max|u| * N / (2*pi) at t = 0
    bool cfl_warning = false;              // cfl_number > 1
    long steps = 0;
};

using VelocitySampler = std::function<std::array<double, 2>(double x, double y)>;

// Integrates d/dt omega + u . grad omega = eps * Laplacian omega with 2/3-rule
// dealiasing, integrating-factor RK4 (the stiff diffusion multiplier is
// exact), and exact advection of the mean velocity mode. The initial sampler
// must be divergence-free to 1e-10 spectrally. NaN/overflow raises
// BlowUpError carrying the last stable time.
Ns2dResult ns2d_solve(const VelocitySampler& u0, const SolverConfig2D& cfg);

// Velocity components on the grid, from Biot-Savart plus the mean mode.
std::array<std::vector<double>, 2> velocity_fields(const VorticityState2D& state);

// Vorticity samples on the grid.
std::vector<double> vorticity_field(const VorticityState2D& state);

// Kinetic energy (1/2) * integral |u|^2 over the torus.
double kinetic_energy(const VorticityState2D& state);

// Largest |k . u_hat(k)| over modes: zero to round-off for Biot-Savart
// velocities.
double spectral_divergence(const VorticityState2D& state);

}  // namespace besovlab
