#include "slender/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "slender/bessel.hpp"
#include "slender/errors.hpp"
#include "slender/quadrature.hpp"

namespace slender {

namespace {

const double kSqrtE = std::exp(0.5);

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_z(double z) {
    if (!(z > 0) || !std::isfinite(z))
        throw DomainError("B-functions need finite z > 0, got " + fmt(z));
}

// B_t and B_n from scaled Bessel values (both are degree-0 homogeneous).
double bt_from(const BesselTriple& s, double z) {
    const double k0 = s.k0, k1 = s.k1;
    return z * k1 * k1 / (2.0 * k0 * k1 + z * (k0 * k0 - k1 * k1));
}

double bn_from(const BesselTriple& s, double z) {
    const double k0 = s.k0, k1 = s.k1, k2 = s.k2;
    const double num = 4.0 * z * k1 * k1 * k2 + z * z * k1 * (k1 * k1 - k0 * k2);
    const double den = 2.0 * k0 * k1 * k2 + z * (k1 * k1 * (k0 + k2) - 2.0 * k0 * k0 * k2);
    return num / den;
}

// Denominators of the three SBT B-functions (their zeros are the poles).
double sbt_denominator(OdeFamily f, double z) {
    const double lg = std::log(0.5 * z) + kGamma;
    switch (f) {
    case OdeFamily::B_SB: return lg;                  // B = -1/den
    case OdeFamily::B_SB_t: return 1.0 + 2.0 * lg;    // B = -1/den
    case OdeFamily::B_SB_n: return 1.0 - 2.0 * lg;    // B = 4/den
    default: break;
    }
    throw DomainError("not an SBT family");
}

double sbt_numerator(OdeFamily f) {
    return f == OdeFamily::B_SB_n ? 4.0 : -1.0;
}

Direction direction_of(OdeFamily f) {
    switch (f) {
    case OdeFamily::B: case OdeFamily::B_SB: case OdeFamily::B_delta: return Direction::longitudinal;
    case OdeFamily::B_t: case OdeFamily::B_SB_t: case OdeFamily::B_delta_t: return Direction::tangential;
    default: return Direction::normal;
    }
}

void require_delta(OdeFamily f, double delta) {
    if (f == OdeFamily::B_delta) {
        if (!(delta > 1.0)) throw ConfigError("Laplace delta-regularisation needs delta > 1, got " + fmt(delta));
    } else if (f == OdeFamily::B_delta_t || f == OdeFamily::B_delta_n) {
        if (!(delta > kSqrtE)) throw ConfigError("Stokes delta-regularisation needs delta > sqrt(e), got " + fmt(delta));
    }
}

double pole_tolerance() { return 64 * std::numeric_limits<double>::epsilon(); }

} // namespace

const char* to_string(Setting s) { return s == Setting::laplace ? "laplace" : "stokes"; }

const char* to_string(Direction d) {
    switch (d) {
    case Direction::longitudinal: return "longitudinal";
    case Direction::tangential: return "tangential";
    case Direction::normal: return "normal";
    }
    return "?";
}

const char* to_string(Method m) {
    switch (m) {
    case Method::pde: return "pde";
    case Method::sbt: return "sbt";
    case Method::sbt_truncated: return "sbt_truncated";
    case Method::delta_reg: return "delta_reg";
    }
    return "?";
}

Setting parse_setting(const std::string& s) {
    if (s == "laplace") return Setting::laplace;
    if (s == "stokes") return Setting::stokes;
    throw ConfigError("unknown setting '" + s + "'");
}

Direction parse_direction(const std::string& s) {
    if (s == "longitudinal" || s == "scalar") return Direction::longitudinal;
    if (s == "tangential") return Direction::tangential;
    if (s == "normal") return Direction::normal;
    throw ConfigError("unknown direction '" + s + "'");
}

Method parse_method(const std::string& s) {
    if (s == "pde") return Method::pde;
    if (s == "sbt") return Method::sbt;
    if (s == "sbt_truncated" || s == "truncated") return Method::sbt_truncated;
    if (s == "delta_reg" || s == "delta") return Method::delta_reg;
    throw ConfigError("unknown method '" + s + "'");
}

const char* to_string(OdeFamily f) {
    switch (f) {
    case OdeFamily::B: return "B";
    case OdeFamily::B_SB: return "B_SB";
    case OdeFamily::B_t: return "B_t";
    case OdeFamily::B_SB_t: return "B_SB_t";
    case OdeFamily::B_n: return "B_n";
    case OdeFamily::B_SB_n: return "B_SB_n";
    case OdeFamily::B_delta: return "B_delta";
    case OdeFamily::B_delta_t: return "B_delta_t";
    case OdeFamily::B_delta_n: return "B_delta_n";
    }
    return "?";
}

Mode::Mode(long k_, double eps_) : k(k_), eps(eps_) {
    if (k == 0) throw DomainError("the k = 0 mode is excluded");
    if (!(eps > 0) || !(eps < 0.5)) throw DomainError("fiber radius must lie in (0, 1/2), got " + fmt(eps));
}

EigenFamily EigenFamily::pde(Setting s, Direction d) {
    EigenFamily f;
    f.setting = s;
    f.direction = d;
    f.method = Method::pde;
    f.validate();
    return f;
}

EigenFamily EigenFamily::sbt(Setting s, Direction d) {
    EigenFamily f = pde(s, d);
    f.method = Method::sbt;
    return f;
}

EigenFamily EigenFamily::truncated(Setting s, Direction d, long cutoff) {
    EigenFamily f = pde(s, d);
    f.method = Method::sbt_truncated;
    f.cutoff = cutoff;
    f.validate();
    return f;
}

EigenFamily EigenFamily::delta_reg(Setting s, Direction d, double delta) {
    EigenFamily f = pde(s, d);
    f.method = Method::delta_reg;
    f.delta = delta;
    f.validate();
    return f;
}

void EigenFamily::validate() const {
    const bool longi = direction == Direction::longitudinal;
    if (longi != (setting == Setting::laplace))
        throw ConfigError(std::string("direction ") + to_string(direction) + " is not available in the " +
                          to_string(setting) + " setting");
    if (method == Method::delta_reg) {
        if (setting == Setting::laplace && !(delta > 1.0))
            throw ConfigError("Laplace delta-regularisation needs delta > 1, got " + fmt(delta));
        if (setting == Setting::stokes && !(delta > kSqrtE))
            throw ConfigError("Stokes delta-regularisation needs delta > sqrt(e) ~ 1.6487, got " + fmt(delta));
    }
    if (method == Method::sbt_truncated && cutoff < -1)
        throw ConfigError("truncation cutoff must be >= 0 (or -1 for the default)");
}

EigenFamily EigenFamily::with_direction(Direction d) const {
    EigenFamily f = *this;
    f.direction = d;
    f.validate();
    return f;
}

std::string EigenFamily::label() const {
    std::string s = std::string(to_string(setting)) + "/" + to_string(direction) + "/" + to_string(method);
    if (method == Method::delta_reg) s += "(" + fmt(delta) + ")";
    if (method == Method::sbt_truncated && cutoff >= 0) s += "(" + std::to_string(cutoff) + ")";
    return s;
}

long default_cutoff(Direction d, double eps) {
    switch (d) {
    case Direction::longitudinal: return long(std::floor(9.0 / (20.0 * kPi * eps)));
    case Direction::tangential: return long(std::floor(1.0 / (4.0 * kPi * eps)));
    case Direction::normal: return long(std::floor(73.0 / (100.0 * kPi * eps)));
    }
    return 0;
}

long effective_cutoff(const EigenFamily& fam, double eps) {
    return fam.cutoff >= 0 ? fam.cutoff : default_cutoff(fam.direction, eps);
}

double lambda_prefactor(Direction d) {
    return d == Direction::tangential ? 4.0 * kPi : 2.0 * kPi;
}

OdeFamily ode_family_for(Direction d, Method m) {
    const int dir = d == Direction::longitudinal ? 0 : d == Direction::tangential ? 1 : 2;
    static const OdeFamily table[3][3] = {
        {OdeFamily::B, OdeFamily::B_SB, OdeFamily::B_delta},
        {OdeFamily::B_t, OdeFamily::B_SB_t, OdeFamily::B_delta_t},
        {OdeFamily::B_n, OdeFamily::B_SB_n, OdeFamily::B_delta_n},
    };
    const int mi = m == Method::pde ? 0 : m == Method::delta_reg ? 2 : 1;
    return table[dir][mi];
}

double sbt_singularity_z(Direction d) {
    switch (d) {
    case Direction::longitudinal: return 2.0 * std::exp(-kGamma);
    case Direction::tangential: return 2.0 * std::exp(-kGamma - 0.5);
    case Direction::normal: return 2.0 * std::exp(0.5 - kGamma);
    }
    return 0;
}

double b_function(OdeFamily fam, double z, double delta, bool allow_post_singularity) {
    require_z(z);
    switch (fam) {
    case OdeFamily::B: return ratio_B(z);
    case OdeFamily::B_t: return bt_from(bessel_k012_scaled(z), z);
    case OdeFamily::B_n: return bn_from(bessel_k012_scaled(z), z);
    case OdeFamily::B_SB:
    case OdeFamily::B_SB_t:
    case OdeFamily::B_SB_n: {
        const double zs = sbt_singularity_z(direction_of(fam));
        const double den = sbt_denominator(fam, z);
        if (std::abs(den) <= pole_tolerance())
            throw PoleError(std::string(to_string(fam)) + " has a pole at z = " + fmt(zs));
        if (!allow_post_singularity && z > zs)
            throw DomainError(std::string(to_string(fam)) + " evaluated past its singularity z = " + fmt(zs) +
                              " without opting in");
        return sbt_numerator(fam) / den;
    }
    case OdeFamily::B_delta:
    case OdeFamily::B_delta_t:
    case OdeFamily::B_delta_n: {
        require_delta(fam, delta);
        const double ld = std::log(delta);
        const double k0 = bessel_k(0, delta * z);
        if (fam == OdeFamily::B_delta) return 1.0 / (ld + k0);
        if (fam == OdeFamily::B_delta_t) return 1.0 / (-1.0 + 2.0 * ld + 2.0 * k0);
        return 4.0 / (1.0 + 2.0 * ld + 2.0 * k0);
    }
    }
    throw DomainError("unknown B-function family");
}

double h_function(double z) {
    const HParts p = h_parts(z);
    return z / 8.0 * p.n3 / p.d3;
}

HParts h_parts(double z) {
    require_z(z);
    const double a = ratio_A(z);
    const double z2 = z * z, a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
    const double n3 = 4 * z2 * z2 * a4 * a2 - 16 * z2 * z * a4 * a - z2 * (120 + 11 * z2) * a4 +
                      4 * z * (-40 + 3 * z2) * a3 + 2 * (-16 + 66 * z2 + 5 * z2 * z2) * a2 +
                      4 * z * (32 + z2) * a - 3 * z2 * (8 + z2);
    const double d = z2 * a3 + z * a2 - (2 + z2) * a - z;
    return {n3, d * d};
}

double ode_rhs(OdeFamily fam, double z, double b, double delta) {
    require_z(z);
    switch (fam) {
    case OdeFamily::B: return (b * b - z * z) / z;
    case OdeFamily::B_SB: return b * b / z;
    case OdeFamily::B_t: return 2.0 / z * b * b - 2.0 * ratio_A(z) * b;
    case OdeFamily::B_SB_t: return 2.0 / z * b * b;
    case OdeFamily::B_n: return b * b / (2.0 * z) - h_function(z);
    case OdeFamily::B_SB_n: return b * b / (2.0 * z);
    case OdeFamily::B_delta:
        require_delta(fam, delta);
        return delta * bessel_k(1, delta * z) * b * b;
    case OdeFamily::B_delta_t:
        require_delta(fam, delta);
        return 2.0 * delta * bessel_k(1, delta * z) * b * b;
    case OdeFamily::B_delta_n:
        require_delta(fam, delta);
        return 0.5 * delta * bessel_k(1, delta * z) * b * b;
    }
    throw DomainError("unknown B-function family");
}

double lambda(const EigenFamily& fam, const Mode& mode) {
    fam.validate();
    const double z = mode.z();
    const double pre = lambda_prefactor(fam.direction);
    switch (fam.method) {
    case Method::pde:
        return pre * b_function(ode_family_for(fam.direction, Method::pde), z);
    case Method::sbt_truncated:
        if (mode.abs_k() > effective_cutoff(fam, mode.eps)) return 0.0;
        [[fallthrough]];
    case Method::sbt:
        return pre * b_function(ode_family_for(fam.direction, Method::sbt), z, 0, true);
    case Method::delta_reg:
        return pre * b_function(ode_family_for(fam.direction, Method::delta_reg), z, fam.delta);
    }
    throw DomainError("unknown method");
}

double inverse_lambda(const EigenFamily& fam, const Mode& mode) {
    fam.validate();
    const double z = mode.z();
    const double pre = lambda_prefactor(fam.direction);
    if (fam.method == Method::sbt || fam.method == Method::sbt_truncated) {
        if (fam.method == Method::sbt_truncated && mode.abs_k() > effective_cutoff(fam, mode.eps)) return 0.0;
        const OdeFamily f = ode_family_for(fam.direction, Method::sbt);
        const double den = sbt_denominator(f, z);
        if (std::abs(den) <= pole_tolerance())
            throw PoleError("forward SBT map is singular at k = " + std::to_string(mode.k) + ", eps = " + fmt(mode.eps));
        return den / (sbt_numerator(f) * pre);
    }
    return 1.0 / lambda(fam, mode);
}

double periodic_kernel_eigenvalue(long k) {
    if (k == 0) throw DomainError("periodic kernel eigenvalue needs |k| >= 1");
    const long n = k < 0 ? -k : k;
    double s = 0;
    for (long j = n; j >= 1; --j) s += 1.0 / (2.0 * j - 1.0);
    return 4.0 * s;
}

double periodic_symbol_log_form(double eps, long k) {
    const Mode m(k, eps);
    return -2.0 * (std::log(0.5 * m.z()) + kGamma);
}

double periodic_symbol_harmonic(double eps, long k) {
    const Mode m(k, eps);
    return -2.0 * std::log(kPi * eps / 8.0) - periodic_kernel_eigenvalue(k);
}

double lambda_sbt_harmonic(Direction d, const Mode& mode) {
    const double x = periodic_symbol_harmonic(mode.eps, mode.k);
    switch (d) {
    case Direction::longitudinal: return 4.0 * kPi / x;
    case Direction::tangential: return 8.0 * kPi / (2.0 * x - 2.0);
    case Direction::normal: return 8.0 * kPi / (1.0 + x);
    }
    return 0;
}

double sign_change_wavenumber(const EigenFamily& fam, double eps) {
    if (fam.method != Method::sbt && fam.method != Method::sbt_truncated)
        throw ConfigError("sign-change wavenumber is defined for SBT families only");
    if (!(eps > 0)) throw DomainError("eps must be positive");
    return sbt_singularity_z(fam.direction) / (kPi * eps);
}

GronwallConstants gronwall_constants() {
    GronwallConstants c;
    c.c_B = b_function(OdeFamily::B_SB, 0.45) + b_function(OdeFamily::B, 0.45);
    c.c_t = b_function(OdeFamily::B_SB_t, 0.25) + b_function(OdeFamily::B_t, 0.25);
    c.c_n = b_function(OdeFamily::B_SB_n, 0.73) + b_function(OdeFamily::B_n, 0.73);
    c.c_l2 = 1.0 / std::abs(std::log(0.4)) + b_function(OdeFamily::B, 0.4);
    c.c_t2 = 4.0 / (5.0 * std::abs(std::log(0.25))) + b_function(OdeFamily::B_t, 0.25);
    c.c_n2 = 4.0 / (1.0 + 2.0 * std::abs(std::log(2.0 / 3.0))) + b_function(OdeFamily::B_n, 2.0 / 3.0);
    c.A1 = ratio_A(1.0);
    return c;
}

double difference_window(Setting setting, Direction direction, Method method2, double eps) {
    const double pe = kPi * eps;
    if (method2 == Method::sbt) {
        switch (direction) {
        case Direction::longitudinal: return 9.0 / (20.0 * pe);
        case Direction::tangential: return 1.0 / (4.0 * pe);
        case Direction::normal: return 73.0 / (100.0 * pe);
        }
    } else if (method2 == Method::delta_reg) {
        switch (direction) {
        case Direction::longitudinal: return 2.0 / (5.0 * pe);
        case Direction::tangential: return 1.0 / (4.0 * pe);
        case Direction::normal: return 2.0 / (3.0 * pe);
        }
    }
    (void)setting;
    throw ConfigError("eigenvalue-difference bounds exist for sbt and delta_reg only");
}

DifferenceMargin eigen_difference_margin(Setting setting, Direction direction, double eps, long k,
                                         Method method2, double delta) {
    if (method2 != Method::sbt && method2 != Method::delta_reg)
        throw ConfigError("eigenvalue-difference bounds exist for sbt and delta_reg only");
    const EigenFamily pde = EigenFamily::pde(setting, direction);
    const EigenFamily other = method2 == Method::delta_reg ? EigenFamily::delta_reg(setting, direction, delta)
                                                           : EigenFamily::sbt(setting, direction);
    const Mode mode(k, eps);
    DifferenceMargin out;
    out.window = difference_window(setting, direction, method2, eps);
    if (double(mode.abs_k()) > out.window)
        throw WindowError("|k| = " + std::to_string(mode.abs_k()) + " exceeds the lemma window |k| <= " +
                              fmt(out.window),
                          out.window);
    out.observed = std::abs(lambda(pde, mode) - lambda(other, mode));
    const GronwallConstants c = gronwall_constants();
    const double pi3 = kPi * kPi * kPi;
    const double ek2 = eps * eps * double(k) * double(k);
    if (method2 == Method::sbt) {
        switch (direction) {
        case Direction::longitudinal: out.bound = 2.0 * pi3 / (2.0 - c.c_B) * ek2; break;
        case Direction::tangential: out.bound = 4.0 * pi3 / (1.0 - c.c_t) * ek2; break;
        case Direction::normal: out.bound = 9.0 * pi3 / (2.0 * (4.0 - c.c_n)) * ek2; break;
        }
    } else {
        const double dd = delta * delta * (1.0 + std::log(delta));
        switch (direction) {
        case Direction::longitudinal: out.bound = 82.0 * pi3 * dd * ek2; break;
        case Direction::tangential: out.bound = 4.0 * kPi * 6.0 * dd / (1.0 - c.c_t2) * kPi * kPi * ek2; break;
        case Direction::normal: out.bound = 2.0 * kPi * 20.0 * dd / (4.0 - c.c_n2) * kPi * kPi * ek2; break;
        }
    }
    out.margin = out.bound - out.observed;
    return out;
}

DifferenceMargin eigen_difference_high_k(Setting setting, Direction direction, double eps, long k,
                                         double delta) {
    const EigenFamily pde = EigenFamily::pde(setting, direction);
    const EigenFamily reg = EigenFamily::delta_reg(setting, direction, delta);
    const Mode mode(k, eps);
    DifferenceMargin out;
    out.window = std::numeric_limits<double>::infinity();
    out.observed = std::abs(lambda(pde, mode) - lambda(reg, mode));
    const double ld = std::log(delta), z = mode.z();
    switch (direction) {
    case Direction::longitudinal: out.bound = 2.0 * kPi * (0.5 + 1.0 / ld + z); break;
    case Direction::tangential: out.bound = 4.0 * kPi * (0.5 + 1.0 / (-1.0 + 2.0 * ld) + z); break;
    case Direction::normal: out.bound = 3.0 * kPi * (1.0 + 8.0 / (3.0 * (1.0 + 2.0 * ld)) + z); break;
    }
    out.margin = out.bound - out.observed;
    return out;
}

double legendre_p(int k, double t) {
    if (k < 0) throw DomainError("Legendre degree must be >= 0");
    if (k == 0) return 1.0;
    double p0 = 1.0, p1 = t;
    for (int n = 1; n < k; ++n) {
        const double p2 = ((2.0 * n + 1.0) * t * p1 - n * p0) / (n + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double legendre_mu(int k) {
    double s = 0;
    for (int j = k; j >= 1; --j) s += 1.0 / j;
    return 2.0 * s;
}

std::vector<double> s_transform_nodes(std::size_t n) {
    std::vector<double> t(n);
    const double h = 2.0 / double(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = -1.0 + (double(i) + 0.5) * h;
    return t;
}

STransformResult s_transform_apply(std::span<const double> phi) {
    const std::size_t n = phi.size();
    if (n < 2) throw ShapeError("S-transform needs at least two samples");
    STransformResult out;
    out.nodes = s_transform_nodes(n);
    out.values.assign(n, 0.0);
    out.coarse = n < 64;
    const double h = 2.0 / double(n);
    // The own cell contributes only at second order (odd integrand there) and is skipped.
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            s += (phi[j] - phi[i]) / std::abs(out.nodes[i] - out.nodes[j]);
        }
        out.values[i] = h * s;
    }
    return out;
}

double periodic_kernel_quadrature(long k, double rel_tol) {
    if (k == 0) throw DomainError("periodic kernel eigenvalue needs |k| >= 1");
    const double kk = double(k < 0 ? -k : k);
    // real part only: the odd imaginary part integrates to zero; symmetric in s'
    auto f = [kk](double t) {
        const double s = std::sin(0.5 * kPi * kk * t);
        return -2.0 * s * s / std::sin(0.5 * kPi * t);
    };
    const auto q = integrate(f, 0.0, 1.0, rel_tol);
    return kPi * q.value[0];
}

IdentityCheck periodization_identity_check(double rel_tol) {
    auto f = [](double z) {
        if (z < 1e-4) {
            const double p2 = kPi * kPi;
            return p2 * z / 24.0 + 7.0 * p2 * p2 * z * z * z / 5760.0;
        }
        return kPi / (2.0 * std::sin(0.5 * kPi * z)) - 1.0 / z;
    };
    IdentityCheck c;
    c.exact = -2.0 * std::log(kPi / 4.0);
    c.value = 2.0 * integrate(f, 0.0, 1.0, rel_tol).value[0];
    c.value_half_tol = 2.0 * integrate(f, 0.0, 1.0, 0.5 * rel_tol).value[0];
    c.error = std::abs(c.value - c.exact);
    return c;
}

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_rational(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

i128 ipow(i128 b, int e) {
    i128 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

const long long kG2[] = {-3105, -32886, -162858, -483254, -891642, -966847, -508816,
                         -12905, 109108, 93644, 134944, 122960, 51264, 8000};
const long long kG3[] = {-4704, -49399, -218100, -514979, -636860, -132064,
                         944672, 1784464, 1643712, 834432, 211456, 18432};

} // namespace

Rational g2_rational(long long p, long long q) {
    if (q <= 0) throw DomainError("denominator must be positive");
    i128 s = 0;
    for (int i = 0; i <= 13; ++i) s += i128(kG2[i]) * ipow(p, i) * ipow(q, 13 - i);
    // 8/(5 (1+2z)^6 (3+2z)^4) * s / q^13 with z = p/q
    const i128 den = 5 * ipow(q, 3) * ipow(q + 2 * p, 6) * ipow(3 * q + 2 * p, 4);
    return make_rational(8 * s, den);
}

Rational g3_rational(long long p, long long q) {
    if (q <= 0) throw DomainError("denominator must be positive");
    i128 s = 0;
    for (int i = 0; i <= 11; ++i) s += i128(kG3[i]) * ipow(p, i) * ipow(q, 11 - i);
    // z/((1+2z)^6 (3+2z)^4) * s / q^11
    const i128 den = ipow(q, 2) * ipow(q + 2 * p, 6) * ipow(3 * q + 2 * p, 4);
    return make_rational(i128(p) * s, den);
}

double g2(double z) {
    double s = 0;
    for (int i = 13; i >= 0; --i) s = s * z + double(kG2[i]);
    return 8.0 * s / (5.0 * std::pow(1 + 2 * z, 6) * std::pow(3 + 2 * z, 4));
}

double g3(double z) {
    double s = 0;
    for (int i = 11; i >= 0; --i) s = s * z + double(kG3[i]);
    return z * s / (std::pow(1 + 2 * z, 6) * std::pow(3 + 2 * z, 4));
}

std::string to_string(const Rational& r) {
    auto str = [](i128 v) {
        if (v == 0) return std::string("0");
        const bool neg = v < 0;
        if (neg) v = -v;
        std::string s;
        while (v > 0) {
            s.push_back(char('0' + int(v % 10)));
            v /= 10;
        }
        if (neg) s.push_back('-');
        return std::string(s.rbegin(), s.rend());
    };
    return str(r.num) + "/" + str(r.den);
}

GrowthBoundReport check_growth_bounds(Direction d, std::span<const double> eps_values, long k_max) {
    const double c = d == Direction::longitudinal ? 2.0 : d == Direction::tangential ? 4.0 : 3.0;
    const double c2 = d == Direction::longitudinal ? 1.0 : d == Direction::tangential ? 2.0 : 3.0;
    const Setting s = d == Direction::longitudinal ? Setting::laplace : Setting::stokes;
    const EigenFamily fam = EigenFamily::pde(s, d);
    GrowthBoundReport r;
    r.min_lower = r.min_upper = std::numeric_limits<double>::infinity();
    double worst = r.min_lower;
    for (double eps : eps_values)
        for (long k = 1; k <= k_max; ++k) {
            const double lam = lambda(fam, Mode(k, eps));
            const double base = c * kPi * kPi * eps * double(k);
            const double lo = lam - base, hi = base + c2 * kPi - lam;
            r.min_lower = std::min(r.min_lower, lo);
            r.min_upper = std::min(r.min_upper, hi);
            if (std::min(lo, hi) < worst) {
                worst = std::min(lo, hi);
                r.worst_eps = eps;
                r.worst_k = k;
            }
            ++r.checked;
        }
    r.ok = r.min_lower > 0 && r.min_upper > 0;
    return r;
}

HBoundReport check_h_bound(std::span<const double> z_grid) {
    HBoundReport r;
    r.min_margin = std::numeric_limits<double>::infinity();
    for (double z : z_grid) {
        const double m = 9.0 * z / 8.0 - std::abs(h_function(z));
        if (m < r.min_margin) {
            r.min_margin = m;
            r.worst_z = z;
        }
    }
    r.ok = r.min_margin > 0;
    return r;
}

} // namespace slender
