#pragma once

#include <complex>
#include <vector>

namespace slender {

// Normal displacement coefficients Y_x, Y_y of a straight periodic filament,
// indexed k + k_max; the k = 0 entries stay zero.
struct DynamicsState {
    double eps = 0.01;
    long k_max = 0;
    double t = 0;
    std::vector<std::complex<double>> yx, yy;

    DynamicsState() = default;
    DynamicsState(double eps, long k_max);
    std::complex<double>& x(long k) { return yx[std::size_t(k + k_max)]; }
    std::complex<double>& y(long k) { return yy[std::size_t(k + k_max)]; }
    const std::complex<double>& x(long k) const { return yx[std::size_t(k + k_max)]; }
    const std::complex<double>& y(long k) const { return yy[std::size_t(k + k_max)]; }
    double norm() const;
};

enum class Scheme { explicit_euler, implicit_exact };

// nu_k = (k^2 - k^4) / lambda_n(eps, k); nu_1 = 0.
double nu(double eps, long k);

DynamicsState step(const DynamicsState& s, double dt, Scheme scheme);
// n steps with the per-mode multipliers computed once.
DynamicsState evolve(const DynamicsState& s, double dt, Scheme scheme, int steps);

// 1/2 sum (pi k)^4 |Y|^2 + 1/2 sum (pi k)^2 |Y|^2 over both components and +-k.
double energy(const DynamicsState& s);

inline double grid_spacing(long k_max) { return 2.0 / (2.0 * double(k_max) + 2.0); }

// Analytic 2/|nu_{k_max}|, or the largest dt for which 200 explicit steps of the
// k_max mode stay within a factor 1e6 of the start (bisection).
double max_stable_dt(double eps, long k_max, bool empirical);

struct StabilityRow {
    double eps;
    long k_max;
    double ds, dt_analytic, dt_empirical;
};

struct StabilitySweep {
    std::vector<StabilityRow> rows;
    double slope = 0;       // d log dt / d log ds (analytic values)
    double slope_empirical = 0;
};

StabilitySweep stability_sweep(double eps, const std::vector<long>& k_max_values);

} // namespace slender
