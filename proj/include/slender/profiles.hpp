#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "slender/spectra.hpp"

namespace slender {

using cplx = std::complex<double>;

// Exterior solution of one Fourier mode. Direction::longitudinal is the
// Laplace scalar problem U(r) = K0(pi r |k|)/K0(pi eps |k|).
struct RadialModeSolution {
    Mode mode{1, 0.1};
    Direction direction = Direction::longitudinal;
    cplx c_p{0, 0};
    cplx c0{0, 0}, c1{0, 0}, c2{0, 0};
};

struct ProfileValue {
    double r = 0;
    cplx u_r{0, 0}, u_theta{0, 0}, u_z{0, 0}, p{0, 0};
    cplx u_minus{0, 0}, u_plus{0, 0};   // normal direction only
    double u = 0;                       // Laplace scalar only
};

RadialModeSolution solve_mode(Direction direction, const Mode& mode);
ProfileValue evaluate_profile(const RadialModeSolution& sol, double r);

// lambda recomputed from the surface traction with one-sided differences at
// r = eps (step = step_factor * eps).
double traction_eigenvalue_numeric(Direction direction, const Mode& mode, double step_factor = 1e-5);

struct ResidualReport {
    std::vector<std::pair<std::string, double>> entries;   // relative residual per equation
    double max = 0;
};

// Profile ODE residuals (centered second differences); r > eps.
ResidualReport residual_momentum(const RadialModeSolution& sol, double r);
// Incompressibility residual, normalised by the sizes of its terms; r >= eps.
double residual_divergence(const RadialModeSolution& sol, double r);

} // namespace slender
