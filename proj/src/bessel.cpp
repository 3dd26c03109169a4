#include "slender/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "slender/errors.hpp"

namespace slender {

namespace {

constexpr double kEuler = std::numbers::egamma;

void require_positive(double z) {
    if (!(z > 0) || !std::isfinite(z)) {
        std::ostringstream os;
        os << "modified Bessel K needs finite z > 0, got " << z;
        throw DomainError(os.str());
    }
}

struct SeriesParts {
    double i0, i1;     // I_0, I_1
    double s0;         // sum H_k y^k / (k!)^2
    double s1;         // sum (psi(k+1)+psi(k+2)) y^k / (k!(k+1)!)
};

// Ascending series with y = z^2/4.
SeriesParts series_parts(double z) {
    const double y = 0.25 * z * z;
    double t0 = 1.0;   // y^k/(k!)^2
    double t1 = 1.0;   // y^k/(k!(k+1)!)
    double h = 0.0;    // H_k
    SeriesParts p{0, 0, 0, 0};
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            t0 *= y / (double(k) * k);
            t1 *= y / (double(k) * (k + 1));
            h += 1.0 / k;
        }
        const double psi_a = -kEuler + h;
        const double psi_b = psi_a + 1.0 / (k + 1);
        p.i0 += t0;
        p.i1 += t1;
        p.s0 += h * t0;
        p.s1 += (psi_a + psi_b) * t1;
        if (k > 2 && t0 < 1e-18 * p.i0 && t1 < 1e-18 * p.i1)
            break;
    }
    p.i1 *= 0.5 * z;
    return p;
}

BesselTriple series_branch(double z) {
    const SeriesParts p = series_parts(z);
    const double lg = std::log(0.5 * z);
    const double k0 = -(lg + kEuler) * p.i0 + p.s0;
    const double k1 = 1.0 / z + lg * p.i1 - 0.25 * z * p.s1;
    const double e = std::exp(z);
    return {k0 * e, k1 * e, (k0 + 2.0 * k1 / z) * e};
}

// Steed's continued fraction (CF2) with the Temme normalisation sum, order 0.
BesselTriple cf2_branch(double x) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 100000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < 1e-17)
            break;
    }
    h *= a1;
    const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    const double k1 = k0 * (x + 0.5 - h) / x;
    return {k0, k1, k0 + 2.0 * k1 / x};
}

double asymptotic_scaled(int nu, double z) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0, prev = 2.0;
    for (int k = 1; k < 200; ++k) {
        term *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * z);
        const double at = std::abs(term);
        if (at > prev)
            break;
        sum += term;
        prev = at;
        if (at < 1e-18 * std::abs(sum))
            break;
    }
    return std::sqrt(std::numbers::pi / (2.0 * z)) * sum;
}

BesselTriple asymptotic_branch(double z) {
    const double k0 = asymptotic_scaled(0, z), k1 = asymptotic_scaled(1, z);
    return {k0, k1, k0 + 2.0 * k1 / z};
}

BesselMethod branch_for(double z) {
    if (z <= kSeriesLimit) return BesselMethod::series;
    if (z <= kAsymptoticLimit) return BesselMethod::continued_fraction;
    return BesselMethod::asymptotic;
}

double pick(const BesselTriple& t, int order) {
    switch (order) {
    case 0: return t.k0;
    case 1: return t.k1;
    case 2: return t.k2;
    default: break;
    }
    throw DomainError("bessel order must be 0, 1 or 2");
}

} // namespace

const char* to_string(BesselMethod m) {
    switch (m) {
    case BesselMethod::series: return "series";
    case BesselMethod::continued_fraction: return "continued_fraction";
    case BesselMethod::asymptotic: return "asymptotic";
    case BesselMethod::oracle: return "oracle";
    }
    return "?";
}

BesselTriple bessel_k012_scaled_branch(double z, BesselMethod branch) {
    require_positive(z);
    switch (branch) {
    case BesselMethod::series: return series_branch(z);
    case BesselMethod::continued_fraction: return cf2_branch(z);
    case BesselMethod::asymptotic: return asymptotic_branch(z);
    default: break;
    }
    throw DomainError("no such evaluation branch");
}

BesselTriple bessel_k012_scaled(double z) {
    require_positive(z);
    return bessel_k012_scaled_branch(z, branch_for(z));
}

BesselTriple bessel_k012(double z) {
    const BesselTriple s = bessel_k012_scaled(z);
    const double e = std::exp(-z);
    return {s.k0 * e, s.k1 * e, s.k2 * e};
}

double bessel_k_scaled(int order, double z) {
    if (order < 0 || order > 2) throw DomainError("bessel order must be 0, 1 or 2");
    return pick(bessel_k012_scaled(z), order);
}

BesselEval bessel_k_eval(int order, double z) {
    BesselEval ev;
    ev.z = z;
    ev.order = order;
    ev.method = branch_for(z);
    const double s = bessel_k_scaled(order, z);
    ev.value = s * std::exp(-z);
    if (ev.value < std::numeric_limits<double>::min()) {
        ev.value = 0.0;
        ev.underflow = true;
    }
    return ev;
}

double bessel_k(int order, double z) { return bessel_k_eval(order, z).value; }

double bessel_i0(double z) {
    if (!std::isfinite(z)) throw DomainError("I0 needs finite z");
    return series_parts(std::abs(z)).i0;
}

double ratio_B(double z) {
    const BesselTriple s = bessel_k012_scaled(z);
    return z * s.k1 / s.k0;
}

double ratio_A(double z) {
    const BesselTriple s = bessel_k012_scaled(z);
    return s.k0 / s.k1;
}

namespace {

// z K1(z) - 1 without cancellation on the series branch.
double zk1_minus_one(double z) {
    if (z <= kSeriesLimit) {
        const SeriesParts p = series_parts(z);
        return z * std::log(0.5 * z) * p.i1 - 0.25 * z * z * p.s1;
    }
    return z * bessel_k(1, z) - 1.0;
}

} // namespace

RatioBoundReport check_ratio_bounds(std::span<const double> z_grid) {
    RatioBoundReport rep;
    rep.margins.reserve(z_grid.size());
    double worst = std::numeric_limits<double>::infinity();
    rep.min_lower = rep.min_upper = std::numeric_limits<double>::infinity();
    for (double z : z_grid) {
        require_positive(z);
        const BesselTriple s = bessel_k012_scaled(z);
        const double r = s.k1 / s.k0;
        const double lo = r - (std::sqrt(z * z + z + 1.0) + 1.0) / (z + 1.0);
        const double up = 1.0 + 0.5 / z - r;
        rep.margins.push_back({z, lo, up});
        rep.min_lower = std::min(rep.min_lower, lo);
        rep.min_upper = std::min(rep.min_upper, up);
        const double m = std::min(lo, up);
        if (m < worst) {
            worst = m;
            rep.worst_z = z;
        }
        if (!(lo > 0) || !(up > 0)) rep.ok = false;
    }
    return rep;
}

SmallZBoundReport check_small_z_bounds(std::span<const double> z_grid) {
    SmallZBoundReport rep;
    rep.min_k0_margin = rep.min_k1_margin = std::numeric_limits<double>::infinity();
    double worst = std::numeric_limits<double>::infinity();
    for (double z : z_grid) {
        require_positive(z);
        if (z >= 1.0) throw DomainError("small-z bounds are stated on (0,1)");
        const double m0 = bessel_k(0, z) + std::log(z);
        const double m1 = zk1_minus_one(z) + z * z * (1.0 + std::abs(std::log(z)));
        rep.min_k0_margin = std::min(rep.min_k0_margin, m0);
        rep.min_k1_margin = std::min(rep.min_k1_margin, m1);
        if (std::min(m0, m1) < worst) {
            worst = std::min(m0, m1);
            rep.worst_z = z;
        }
        if (!(m0 >= 0) || !(m1 >= 0)) rep.ok = false;
    }
    return rep;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(a + (b - a) * double(i) / double(n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace slender
