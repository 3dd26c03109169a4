#include "slender/dynamics.hpp"

#include <cmath>

#include "slender/errors.hpp"
#include "slender/experiments.hpp"
#include "slender/spectra.hpp"

namespace slender {

DynamicsState::DynamicsState(double eps_, long k_max_) : eps(eps_), k_max(k_max_) {
    if (k_max < 1) throw ShapeError("dynamics needs k_max >= 1");
    if (!(eps > 0) || !(eps < 0.5)) throw DomainError("fiber radius must lie in (0, 1/2)");
    yx.assign(std::size_t(2 * k_max + 1), 0.0);
    yy.assign(std::size_t(2 * k_max + 1), 0.0);
}

double DynamicsState::norm() const {
    double s = 0;
    for (std::size_t i = 0; i < yx.size(); ++i) s += std::norm(yx[i]) + std::norm(yy[i]);
    return std::sqrt(s);
}

double nu(double eps, long k) {
    if (k == 0) throw DomainError("nu_k is defined for k != 0");
    const double kk = double(k < 0 ? -k : k);
    if (kk == 1.0) return 0.0;
    const double lam = lambda(EigenFamily::pde(Setting::stokes, Direction::normal), Mode(k, eps));
    return (kk * kk - kk * kk * kk * kk) / lam;
}

namespace {

std::vector<double> multipliers(const DynamicsState& s, double dt, Scheme scheme) {
    std::vector<double> m(std::size_t(s.k_max + 1), 1.0);
    for (long k = 1; k <= s.k_max; ++k) {
        const double v = nu(s.eps, k);
        m[std::size_t(k)] = scheme == Scheme::explicit_euler ? 1.0 + dt * v : std::exp(dt * v);
    }
    return m;
}

void apply(DynamicsState& s, const std::vector<double>& m) {
    for (long k = 1; k <= s.k_max; ++k) {
        const double f = m[std::size_t(k)];
        s.x(k) *= f;
        s.x(-k) *= f;
        s.y(k) *= f;
        s.y(-k) *= f;
    }
}

} // namespace

DynamicsState step(const DynamicsState& s, double dt, Scheme scheme) { return evolve(s, dt, scheme, 1); }

DynamicsState evolve(const DynamicsState& s, double dt, Scheme scheme, int steps) {
    if (!(dt > 0)) throw DomainError("time step must be positive");
    DynamicsState out = s;
    out.x(0) = out.y(0) = 0.0;
    const auto m = multipliers(s, dt, scheme);
    for (int i = 0; i < steps; ++i) apply(out, m);
    out.t += dt * steps;
    return out;
}

double energy(const DynamicsState& s) {
    double e = 0;
    for (long k = -s.k_max; k <= s.k_max; ++k) {
        const double pk2 = kPi * kPi * double(k) * double(k);
        const double a = std::norm(s.x(k)) + std::norm(s.y(k));
        e += 0.5 * (pk2 * pk2 + pk2) * a;
    }
    return e;
}

double max_stable_dt(double eps, long k_max, bool empirical) {
    if (k_max < 8) throw ShapeError("stability analysis needs k_max >= 8");
    const double analytic = 2.0 / std::abs(nu(eps, k_max));
    if (!empirical) return analytic;

    DynamicsState worst(eps, k_max);
    worst.x(k_max) = worst.x(-k_max) = 1.0;
    const double n0 = worst.norm();
    auto stable = [&](double dt) {
        DynamicsState s = worst;
        const auto m = multipliers(s, dt, Scheme::explicit_euler);
        for (int i = 0; i < 200; ++i) {
            apply(s, m);
            if (s.norm() > 1e6 * n0) return false;
        }
        return true;
    };
    double lo = 0.0, hi = analytic;
    while (stable(hi)) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 60 && hi - lo > 1e-10 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (stable(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

StabilitySweep stability_sweep(double eps, const std::vector<long>& k_max_values) {
    StabilitySweep sw;
    std::vector<double> lx, ly, lye;
    for (long K : k_max_values) {
        StabilityRow r{eps, K, grid_spacing(K), max_stable_dt(eps, K, false), max_stable_dt(eps, K, true)};
        sw.rows.push_back(r);
        lx.push_back(std::log(r.ds));
        ly.push_back(std::log(r.dt_analytic));
        lye.push_back(std::log(r.dt_empirical));
    }
    sw.slope = least_squares_fit(lx, ly).slope;
    sw.slope_empirical = least_squares_fit(lx, lye).slope;
    return sw;
}

} // namespace slender
