// Reference K_nu from K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt,
// integrated in long double with exp(-z) pulled out of the integrand.
#include <cmath>
#include <limits>
#include <sstream>

#include "slender/bessel.hpp"
#include "slender/errors.hpp"
#include "slender/quadrature.hpp"

namespace slender {

namespace {

using real = long double;

// exponent of the integrand relative to its value at t = 0
real decay(real z, real t) {
    const real s = std::sinh(t / 2);
    return 2 * z * s * s;
}

// Smallest T with decay(T) - 2T >= 55: the neglected tail is below e^-55
// relative to the t = 0 value for every order up to 2.
real truncation_point(real z) {
    real hi = 1;
    while (decay(z, hi) - 2 * hi < 55) hi *= 2;
    real lo = hi / 2;
    if (decay(z, lo) - 2 * lo >= 55) lo = 0;
    for (int i = 0; i < 80; ++i) {
        real mid = (lo + hi) / 2;
        if (decay(z, mid) - 2 * mid >= 55) hi = mid;
        else lo = mid;
    }
    return hi;
}

} // namespace

std::vector<OracleResult> oracle_bessel_k012(double zd) {
    if (!(zd > 0) || !std::isfinite(zd)) {
        std::ostringstream os;
        os << "oracle needs finite z > 0, got " << zd;
        throw DomainError(os.str());
    }
    const real z = zd;
    const real T = truncation_point(z);
    auto f = [z](real t) {
        const real e = std::exp(-decay(z, t));
        const real c = std::cosh(t);
        return std::array<real, 3>{e, e * c, e * (2 * c * c - 1)};
    };
    const auto q = integrate_adaptive<real, 3>(f, real(0), T, real(1e-17L));
    if (!q.converged || q.error > 1e-14L) {
        std::ostringstream os;
        os << "oracle quadrature did not converge at z = " << zd << " (estimate " << double(q.error) << ")";
        throw AccuracyError(os.str(), double(q.error));
    }
    std::vector<OracleResult> out(3);
    const real ez = std::exp(-z);
    for (int n = 0; n < 3; ++n) {
        out[n].scaled = double(q.value[n]);
        out[n].value = double(q.value[n] * ez);
        out[n].rel_error = double(q.error);
        out[n].panels = q.panels;
    }
    return out;
}

OracleResult oracle_bessel_k(int order, double z) {
    if (order < 0 || order > 2) throw DomainError("bessel order must be 0, 1 or 2");
    return oracle_bessel_k012(z)[order];
}

} // namespace slender
