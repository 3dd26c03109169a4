#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slender/operators.hpp"
#include "slender/spectra.hpp"

namespace slender {

struct LinearFit {
    double slope = 0, intercept = 0, residual = 0;   // residual: RMS of fit errors
};
LinearFit least_squares_fit(const std::vector<double>& x, const std::vector<double>& y);

enum class Regularity { H1, H2 };
const char* to_string(Regularity r);
Regularity parse_regularity(const std::string& s);

// Seeds used by the acceptance sweeps.
inline constexpr std::uint64_t kSeeds[3] = {20240611ull, 7ull, 1234567ull};

// eps_grid: 6 geometric points from 10^-1.5 to 10^-3.
std::vector<double> default_eps_grid();
// Modes kept for a given eps: ceil(64/eps).
long resolution_for(double eps);

struct ConvergenceReport {
    Setting setting = Setting::laplace;
    Method method = Method::sbt_truncated;
    double delta = 0;
    Regularity regularity = Regularity::H1;
    std::uint64_t seed = 0;
    std::vector<double> eps;
    std::vector<double> errors;
    std::vector<long> k_max;
    double slope = 0;
    double residual = 0;
};

// Tracked C2/C1 ratios and the optimal delta they select for each setting/regularity.
double tracked_ratio(Setting s, Regularity r);

// L2 error between the PDE inverse map and the approximation on a rough field
// normalised to unit H1 (or H2) norm. delta <= 0 selects optimal_delta(tracked ratio).
ConvergenceReport convergence_study(Setting setting, Method method, Regularity regularity,
                                    const std::vector<double>& eps_grid, std::uint64_t seed, double delta = 0,
                                    long k_max_override = 0);

struct WellposednessReport {
    Setting setting = Setting::laplace;
    FieldProfile profile = FieldProfile::h1_rough;
    std::vector<double> eps;
    std::vector<double> values;   // ||L^{-1}u||_{L2} |log eps| / ||u||_{H1}
    double spread = 0;            // max / min
};

WellposednessReport wellposedness_constant(Setting setting, const std::vector<double>& eps_grid, std::uint64_t seed,
                                           FieldProfile profile = FieldProfile::h1_rough, long k_max_override = 0);

// Root of delta^2 (-1 + 2 log delta)^2 (3/2 + log delta) = ratio (Stokes, delta > sqrt e)
// or delta^2 log^2 delta (3 + 2 log delta) = ratio (Laplace, delta > 1).
double optimal_delta(Setting setting, double ratio);
double optimal_delta_lhs(Setting setting, double delta);

// C_delta = C1 delta^2 (1 + log delta) + C2/(-1 + 2 log delta)  (Stokes), C2/log delta (Laplace).
std::vector<double> cdelta_profile(Setting setting, const std::vector<double>& delta_grid, double c1, double c2);

std::string report_to_json(const ConvergenceReport& r);
std::string report_to_csv(const ConvergenceReport& r);

} // namespace slender
