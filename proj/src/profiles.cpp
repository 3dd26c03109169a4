#include "slender/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "slender/bessel.hpp"
#include "slender/errors.hpp"

namespace slender {

namespace {

constexpr cplx I{0.0, 1.0};

double sgn(long k) { return k > 0 ? 1.0 : -1.0; }

BesselTriple k_at(double x) {
    if (x > 700.0) return {0.0, 0.0, 0.0};
    return bessel_k012(x);
}

using CFun = std::function<cplx(double)>;

// one-sided 4-point first derivative at x, stepping outward
cplx d1_forward(const CFun& f, double x, double h) {
    return (-11.0 * f(x) + 18.0 * f(x + h) - 9.0 * f(x + 2 * h) + 2.0 * f(x + 3 * h)) / (6.0 * h);
}

cplx d1_central(const CFun& f, double x, double h) {
    return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

cplx d2_central(const CFun& f, double x, double h) {
    return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h * h);
}

double rel(cplx residual, std::initializer_list<cplx> terms) {
    double s = 0;
    for (cplx t : terms) s += std::abs(t);
    return s > 0 ? std::abs(residual) / s : std::abs(residual);
}

} // namespace

RadialModeSolution solve_mode(Direction direction, const Mode& mode) {
    RadialModeSolution sol;
    sol.mode = mode;
    sol.direction = direction;
    const double z = mode.z(), eps = mode.eps, q = kPi * double(mode.abs_k()), s = sgn(mode.k);
    if (z > 700.0) {
        std::ostringstream os;
        os << "pi eps |k| = " << z << " is beyond the range where K values are representable";
        throw UnderflowError(os.str());
    }
    const BesselTriple kb = bessel_k012(z);
    const double K0 = kb.k0, K1 = kb.k1, K2 = kb.k2;
    switch (direction) {
    case Direction::longitudinal:
        sol.c0 = 1.0 / K0;
        break;
    case Direction::tangential:
        sol.c_p = -I * 2.0 * kPi * double(mode.k) * K1 / (2.0 * K0 * K1 + z * (K0 * K0 - K1 * K1));
        sol.c1 = -sol.c_p * eps * K0 / (2.0 * K1);
        sol.c0 = 1.0 / K0 + I * sol.c_p * eps * K1 * s / (2.0 * K0);
        break;
    case Direction::normal:
        sol.c_p = 4.0 * q * K1 * K2 / (2.0 * K0 * K1 * K2 + z * (K1 * K1 * (K0 + K2) - 2.0 * K0 * K0 * K2));
        sol.c1 = I * sol.c_p * eps * K0 * s / (2.0 * K1);
        sol.c0 = 2.0 / K0 - sol.c_p * eps * K1 / (2.0 * K0);
        sol.c2 = -sol.c_p * eps * K1 / (2.0 * K2);
        break;
    }
    return sol;
}

ProfileValue evaluate_profile(const RadialModeSolution& sol, double r) {
    const double eps = sol.mode.eps;
    if (!(r >= eps * (1.0 - 1e-14)))
        throw DomainError("profiles live in the fluid, r >= eps");
    const double q = kPi * double(sol.mode.abs_k()), s = sgn(sol.mode.k);
    ProfileValue v;
    v.r = r;
    switch (sol.direction) {
    case Direction::longitudinal: {
        const double z = sol.mode.z();
        // ratio of scaled values keeps this finite for large arguments
        v.u = bessel_k_scaled(0, q * r) / bessel_k_scaled(0, z) * std::exp(-(q * r - z));
        v.u_z = v.u;
        break;
    }
    case Direction::tangential: {
        const BesselTriple kr = k_at(q * r);
        v.u_r = sol.c1 * kr.k1 + sol.c_p * r / 2.0 * kr.k0;
        v.u_z = sol.c0 * kr.k0 - I * sol.c_p * r / 2.0 * kr.k1 * s;
        v.p = sol.c_p * kr.k0;
        break;
    }
    case Direction::normal: {
        const BesselTriple kr = k_at(q * r);
        v.u_z = sol.c1 * kr.k1 - I * sol.c_p * r / 2.0 * kr.k0 * s;
        v.u_minus = sol.c2 * kr.k2 + sol.c_p * r / 2.0 * kr.k1;
        v.u_plus = sol.c0 * kr.k0 + sol.c_p * r / 2.0 * kr.k1;
        v.u_r = 0.5 * (v.u_plus + v.u_minus);
        v.u_theta = 0.5 * (v.u_plus - v.u_minus);
        v.p = sol.c_p * kr.k1;
        break;
    }
    }
    return v;
}

double traction_eigenvalue_numeric(Direction direction, const Mode& mode, double step_factor) {
    if (!(step_factor >= 1e-12) || !(step_factor < 0.1))
        throw AccuracyError("finite-difference step is outside the usable range", step_factor);
    const RadialModeSolution sol = solve_mode(direction, mode);
    const double eps = mode.eps, h = step_factor * eps;
    auto field = [&](auto pick) { return CFun([&, pick](double r) { return pick(evaluate_profile(sol, r)); }); };
    cplx lam;
    switch (direction) {
    case Direction::longitudinal: {
        const cplx du = d1_forward(field([](const ProfileValue& v) { return cplx(v.u); }), eps, h);
        lam = 2.0 * kPi * eps * (-du);
        break;
    }
    case Direction::tangential: {
        const cplx duz = d1_forward(field([](const ProfileValue& v) { return v.u_z; }), eps, h);
        const cplx ur = evaluate_profile(sol, eps).u_r;
        lam = -2.0 * kPi * eps * (duz + I * kPi * double(mode.k) * ur);
        break;
    }
    case Direction::normal: {
        const cplx dur = d1_forward(field([](const ProfileValue& v) { return v.u_r; }), eps, h);
        const cplx dut = d1_forward(field([](const ProfileValue& v) { return v.u_theta; }), eps, h);
        const cplx p = evaluate_profile(sol, eps).p;
        lam = -kPi * eps * (2.0 * dur + dut - p);
        break;
    }
    }
    if (std::abs(lam.imag()) > 1e-10 * std::abs(lam.real())) {
        std::ostringstream os;
        os << "traction eigenvalue has a spurious imaginary part " << lam.imag();
        throw AccuracyError(os.str(), std::abs(lam.imag() / lam.real()));
    }
    return lam.real();
}

ResidualReport residual_momentum(const RadialModeSolution& sol, double r) {
    const double eps = sol.mode.eps;
    if (!(r > eps)) throw DomainError("momentum residuals are evaluated strictly inside the fluid, r > eps");
    const double q = kPi * double(sol.mode.abs_k()), kk = kPi * double(sol.mode.k);
    // keep the stencil in the fluid
    const double h = std::min(1e-3 * r, (r - eps) / 2.0);
    ResidualReport rep;
    auto comp = [&](auto pick) { return CFun([&, pick](double x) { return pick(evaluate_profile(sol, x)); }); };
    auto add = [&rep](const std::string& name, double v) {
        rep.entries.emplace_back(name, v);
        rep.max = std::max(rep.max, v);
    };
    const BesselTriple kr = k_at(q * r);
    switch (sol.direction) {
    case Direction::longitudinal: {
        const CFun u = comp([](const ProfileValue& v) { return cplx(v.u); });
        const cplx a = d2_central(u, r, h), b = d1_central(u, r, h) / r, c = -q * q * u(r);
        add("laplace", rel(a + b + c, {a, b, c}));
        break;
    }
    case Direction::tangential: {
        const CFun ur = comp([](const ProfileValue& v) { return v.u_r; });
        const CFun uz = comp([](const ProfileValue& v) { return v.u_z; });
        const CFun p = comp([](const ProfileValue& v) { return v.p; });
        {
            const cplx a = d2_central(ur, r, h), b = d1_central(ur, r, h) / r, c = -(q * q + 1.0 / (r * r)) * ur(r);
            const cplx f = -sol.c_p * q * kr.k1;
            add("U_r", rel(a + b + c - f, {a, b, c, f}));
        }
        {
            const cplx a = d2_central(uz, r, h), b = d1_central(uz, r, h) / r, c = -q * q * uz(r);
            const cplx f = I * sol.c_p * kk * kr.k0;
            add("U_z", rel(a + b + c - f, {a, b, c, f}));
        }
        {
            const cplx a = d2_central(p, r, h), b = d1_central(p, r, h) / r, c = -q * q * p(r);
            add("pressure", rel(a + b + c, {a, b, c}));
        }
        break;
    }
    case Direction::normal: {
        const CFun ur = comp([](const ProfileValue& v) { return v.u_r; });
        const CFun ut = comp([](const ProfileValue& v) { return v.u_theta; });
        const CFun uz = comp([](const ProfileValue& v) { return v.u_z; });
        const CFun p = comp([](const ProfileValue& v) { return v.p; });
        const cplx urv = ur(r), utv = ut(r);
        {
            const cplx a = d2_central(ur, r, h), b = d1_central(ur, r, h) / r, c = 2.0 * (utv - urv) / (r * r),
                       d = -q * q * urv;
            const cplx f = -sol.c_p * q * kr.k0 - sol.c_p * kr.k1 / r;
            add("U_r", rel(a + b + c + d - f, {a, b, c, d, f}));
        }
        {
            const cplx a = d2_central(ut, r, h), b = d1_central(ut, r, h) / r, c = 2.0 * (urv - utv) / (r * r),
                       d = -q * q * utv;
            const cplx f = sol.c_p * kr.k1 / r;
            add("U_theta", rel(a + b + c + d - f, {a, b, c, d, f}));
        }
        {
            const cplx a = d2_central(uz, r, h), b = d1_central(uz, r, h) / r, c = -(q * q + 1.0 / (r * r)) * uz(r);
            const cplx f = I * kk * sol.c_p * kr.k1;
            add("U_z", rel(a + b + c - f, {a, b, c, f}));
        }
        {
            const cplx a = d2_central(p, r, h), b = d1_central(p, r, h) / r, c = -(q * q + 1.0 / (r * r)) * p(r);
            add("pressure", rel(a + b + c, {a, b, c}));
        }
        break;
    }
    }
    return rep;
}

double residual_divergence(const RadialModeSolution& sol, double r) {
    const double eps = sol.mode.eps;
    if (!(r >= eps)) throw DomainError("divergence is evaluated in the fluid, r >= eps");
    if (sol.direction == Direction::longitudinal) return 0.0;
    const double kk = kPi * double(sol.mode.k);
    const double h = 1e-4 * r;
    auto comp = [&](auto pick) { return CFun([&, pick](double x) { return pick(evaluate_profile(sol, x)); }); };
    const CFun ur = comp([](const ProfileValue& v) { return v.u_r; });
    const cplx dur = (r - 2 * h < eps) ? d1_forward(ur, r, h) : d1_central(ur, r, h);
    const ProfileValue v = evaluate_profile(sol, r);
    const cplx a = dur, c = I * kk * v.u_z;
    const cplx b = sol.direction == Direction::tangential ? v.u_r / r : (v.u_r - v.u_theta) / r;
    // the terms can all vanish (normal mode at r = eps), so q|U| sets the scale as well
    const double q = kPi * double(sol.mode.abs_k());
    const cplx scale = q * (std::abs(v.u_r) + std::abs(v.u_theta) + std::abs(v.u_z));
    return rel(a + b + c, {a, b, c, scale});
}

} // namespace slender
