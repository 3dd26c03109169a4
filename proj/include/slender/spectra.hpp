#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace slender {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kGamma = std::numbers::egamma;

enum class Setting { laplace, stokes };
enum class Direction { longitudinal, tangential, normal };
enum class Method { pde, sbt, sbt_truncated, delta_reg };

const char* to_string(Setting s);
const char* to_string(Direction d);
const char* to_string(Method m);
Setting parse_setting(const std::string& s);
Direction parse_direction(const std::string& s);
Method parse_method(const std::string& s);

// One Fourier mode e^{i pi k z} on a fiber of radius eps.
struct Mode {
    long k;
    double eps;

    Mode(long k, double eps);
    long abs_k() const { return k < 0 ? -k : k; }
    double z() const { return kPi * eps * double(abs_k()); }
};

struct EigenFamily {
    Setting setting = Setting::laplace;
    Direction direction = Direction::longitudinal;
    Method method = Method::pde;
    double delta = 0;       // delta_reg only
    long cutoff = -1;       // sbt_truncated: N (tangential/longitudinal) or M (normal); -1 = default

    static EigenFamily pde(Setting s, Direction d);
    static EigenFamily sbt(Setting s, Direction d);
    static EigenFamily truncated(Setting s, Direction d, long cutoff = -1);
    static EigenFamily delta_reg(Setting s, Direction d, double delta);

    // Throws ConfigError on an invalid combination.
    void validate() const;
    // Same family with the direction swapped (vector fields resolve per component).
    EigenFamily with_direction(Direction d) const;
    std::string label() const;
};

// Default truncation cutoffs: floor(9/(20 pi eps)) Laplace, floor(1/(4 pi eps))
// tangential, floor(73/(100 pi eps)) normal.
long default_cutoff(Direction d, double eps);
long effective_cutoff(const EigenFamily& fam, double eps);

// Eigenvalue of the inverse map (velocity -> force) for one mode.
double lambda(const EigenFamily& fam, const Mode& mode);
// Reciprocal 1/lambda; 0 outside a truncation band; PoleError where the SBT
// symbol vanishes.
double inverse_lambda(const EigenFamily& fam, const Mode& mode);

// SBT eigenvalue through the harmonic-sum periodic spectrum instead of the log form.
double lambda_sbt_harmonic(Direction d, const Mode& mode);

enum class OdeFamily { B, B_SB, B_t, B_SB_t, B_n, B_SB_n, B_delta, B_delta_t, B_delta_n };
const char* to_string(OdeFamily f);

// Prefactor p with lambda = p * B(pi eps |k|): 2 pi, 4 pi or 2 pi.
double lambda_prefactor(Direction d);
OdeFamily ode_family_for(Direction d, Method m);

double b_function(OdeFamily fam, double z, double delta = 0, bool allow_post_singularity = false);
double ode_rhs(OdeFamily fam, double z, double b_value, double delta = 0);
double h_function(double z);
// Numerator / denominator of h(z) = (z/8) N3/D3 (exposed for the |h| < 9z/8 margins).
struct HParts {
    double n3, d3;
};
HParts h_parts(double z);

// z at which the SBT symbol changes sign; sign_change_wavenumber divides by pi eps.
double sbt_singularity_z(Direction d);

// Linear growth bounds c pi^2 eps|k| < lambda < c pi^2 eps|k| + c' pi with
// (c, c') = (2, 1) longitudinal, (4, 2) tangential, (3, 3) normal.
struct GrowthBoundReport {
    double min_lower = 0, min_upper = 0;   // smallest margins seen
    double worst_eps = 0;
    long worst_k = 0;
    long checked = 0;
    bool ok = true;
};
GrowthBoundReport check_growth_bounds(Direction d, std::span<const double> eps_values, long k_max);

// 9z/8 - |h(z)| over a grid; ok iff every margin is positive.
struct HBoundReport {
    double min_margin = 0, worst_z = 0;
    bool ok = true;
};
HBoundReport check_h_bound(std::span<const double> z_grid);
double sign_change_wavenumber(const EigenFamily& fam, double eps);

// Grönwall constants built from b_function.
struct GronwallConstants {
    double c_B, c_t, c_n;        // SBT lemmas
    double c_l2, c_t2, c_n2;     // delta-regularised lemmas
    double A1;                   // K0(1)/K1(1)
};
GronwallConstants gronwall_constants();

struct DifferenceMargin {
    double observed = 0;    // |lambda_pde - lambda_method|
    double bound = 0;       // proof-constant bound
    double margin = 0;      // bound - observed
    double window = 0;      // largest admissible |k|
};

// method2 must be sbt or delta_reg; throws WindowError outside the window.
DifferenceMargin eigen_difference_margin(Setting setting, Direction direction, double eps, long k,
                                         Method method2, double delta = 0);
// High-wavenumber bound valid for every k (delta_reg only).
DifferenceMargin eigen_difference_high_k(Setting setting, Direction direction, double eps, long k,
                                         double delta);
double difference_window(Setting setting, Direction direction, Method method2, double eps);

// Legendre polynomial by the three-term recurrence.
double legendre_p(int k, double t);
double legendre_mu(int k);   // 2 * sum_{j<=k} 1/j

struct STransformResult {
    std::vector<double> nodes;   // midpoint grid on [-1,1]
    std::vector<double> values;  // S[phi] at the nodes
    bool coarse = false;         // resolution below 64
};

// phi sampled at the n midpoints -1 + (i + 1/2) 2/n.
STransformResult s_transform_apply(std::span<const double> phi_at_midpoints);
std::vector<double> s_transform_nodes(std::size_t n);

double periodic_kernel_eigenvalue(long k);
// -2(log(pi eps |k|/2) + gamma) - the log surrogate of -2 log(pi eps/8) - mu_k^per.
double periodic_symbol_log_form(double eps, long k);
double periodic_symbol_harmonic(double eps, long k);
// Quadrature of (pi/2) int (e^{i pi k s'} - e^{i pi k s}) / |sin(pi(s-s')/2)| ds' at s = 0.
double periodic_kernel_quadrature(long k, double rel_tol = 1e-12);

struct IdentityCheck {
    double value = 0, exact = 0, error = 0, value_half_tol = 0;
};
IdentityCheck periodization_identity_check(double rel_tol = 1e-12);

// Exact-rational spot checks of the two helper polynomials of the h(z) bound.
struct Rational {
    __int128 num = 0, den = 1;
};
Rational g2_rational(long long p, long long q);   // g2(p/q)
Rational g3_rational(long long p, long long q);
double g2(double z);
double g3(double z);
std::string to_string(const Rational& r);

} // namespace slender
