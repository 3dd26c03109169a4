#pragma once

#include <span>
#include <vector>

namespace slender {

enum class BesselMethod { series, continued_fraction, asymptotic, oracle };

const char* to_string(BesselMethod m);

struct BesselEval {
    double z = 0;
    int order = 0;
    double value = 0;
    BesselMethod method = BesselMethod::series;
    bool underflow = false;   // K underflowed to 0 (z beyond ~700)
};

// Branch switch points of bessel_k; the test suite checks continuity there.
inline constexpr double kSeriesLimit = 2.0;
inline constexpr double kAsymptoticLimit = 20.0;

struct BesselTriple {
    double k0, k1, k2;
};

// K_0, K_1, K_2 at z; throws DomainError for z <= 0 or non-finite z.
double bessel_k(int order, double z);
BesselEval bessel_k_eval(int order, double z);
// exp(z) K_nu(z); finite for every representable z > 0.
double bessel_k_scaled(int order, double z);
BesselTriple bessel_k012_scaled(double z);
BesselTriple bessel_k012(double z);

// Evaluate one specific branch (series / continued fraction / asymptotic), scaled.
BesselTriple bessel_k012_scaled_branch(double z, BesselMethod branch);

double bessel_i0(double z);

// Integral-representation reference values.
struct OracleResult {
    double value = 0;     // K_nu(z), may underflow to 0
    double scaled = 0;    // exp(z) K_nu(z)
    double rel_error = 0; // self-estimated relative error
    int panels = 0;
};

OracleResult oracle_bessel_k(int order, double z);
// All three orders from one quadrature pass.
std::vector<OracleResult> oracle_bessel_k012(double z);

double ratio_B(double z);   // z K1 / K0
double ratio_A(double z);   // K0 / K1

struct RatioMargin {
    double z, lower, upper;
};

struct RatioBoundReport {
    std::vector<RatioMargin> margins;
    double min_lower = 0, min_upper = 0;
    double worst_z = 0;     // point with the smallest relative margin
    bool ok = true;
};

// K1/K0 - (sqrt(z^2+z+1)+1)/(z+1) and 1 + 1/(2z) - K1/K0 at every grid point.
RatioBoundReport check_ratio_bounds(std::span<const double> z_grid);

// K0(z) + log z and z K1(z) - 1 + z^2 (1 + |log z|) on (0,1).
struct SmallZBoundReport {
    double min_k0_margin = 0, min_k1_margin = 0;
    double worst_z = 0;
    bool ok = true;
};
SmallZBoundReport check_small_z_bounds(std::span<const double> z_grid);

std::vector<double> log_grid(double lo, double hi, std::size_t n);

} // namespace slender
