#include <gtest/gtest.h>

#include <cmath>

#include "slender/dynamics.hpp"
#include "slender/errors.hpp"
#include "slender/spectra.hpp"

using namespace slender;

TEST(Dynamics, NuSigns) {
    EXPECT_EQ(nu(0.01, 1), 0.0);
    EXPECT_EQ(nu(0.01, -1), 0.0);
    for (long k = 2; k <= 2000; ++k) EXPECT_LT(nu(0.01, k), 0.0);
    EXPECT_THROW(nu(0.01, 0), DomainError);
}

TEST(Dynamics, NeutralModeAndImplicitDecay) {
    DynamicsState s(0.01, 16);
    s.x(1) = s.x(-1) = 1.0;
    const double e0 = energy(s);
    const auto t = evolve(s, 0.1, Scheme::implicit_exact, 10);
    EXPECT_DOUBLE_EQ(energy(t), e0);

    DynamicsState q(0.01, 16);
    q.y(4) = q.y(-4) = 1.0;
    const double dt = 1e-3;
    const auto q1 = step(q, dt, Scheme::implicit_exact);
    EXPECT_NEAR(energy(q1) / energy(q), std::exp(2 * nu(0.01, 4) * dt), 1e-12);
}

TEST(Dynamics, ExplicitInstabilityPastLimit) {
    const long K = 16;
    DynamicsState s(0.01, K);
    s.x(K) = s.x(-K) = 1.0;
    const double dt = 3.0 / std::abs(nu(0.01, K));
    const auto t = step(s, dt, Scheme::explicit_euler);
    EXPECT_NEAR(std::abs(t.x(K)), 2.0, 1e-12);
}

TEST(Dynamics, Linearity) {
    DynamicsState a(0.05, 12), b(0.05, 12), ab(0.05, 12);
    a.x(3) = a.x(-3) = 1.0;
    b.y(7) = b.y(-7) = 0.5;
    ab.x(3) = ab.x(-3) = 1.0;
    ab.y(7) = ab.y(-7) = 0.5;
    const auto ea = evolve(a, 1e-4, Scheme::explicit_euler, 5), eb = evolve(b, 1e-4, Scheme::explicit_euler, 5),
               eab = evolve(ab, 1e-4, Scheme::explicit_euler, 5);
    for (long k = -12; k <= 12; ++k) {
        EXPECT_NEAR(std::abs(eab.x(k) - ea.x(k) - eb.x(k)), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(eab.y(k) - ea.y(k) - eb.y(k)), 0.0, 1e-12);
    }
}

TEST(Dynamics, StableDt) {
    for (long K : {8L, 32L, 128L}) {
        const double a = max_stable_dt(0.01, K, false), e = max_stable_dt(0.01, K, true);
        EXPECT_NEAR(e / a, 1.0, 0.1);
    }
    EXPECT_THROW(max_stable_dt(0.01, 4, false), ShapeError);
    // quartic regime: doubling K shrinks dt by roughly 16 up to the log factor
    const double r = max_stable_dt(1e-4, 16, false) / max_stable_dt(1e-4, 32, false);
    EXPECT_GT(r, 12.0);
    EXPECT_LT(r, 17.0);
}

TEST(Dynamics, SweepSlopes) {
    EXPECT_NEAR(stability_sweep(1e-1, {256, 512, 1024, 2048, 4096}).slope, 3.0, 0.3);
    EXPECT_NEAR(stability_sweep(1e-4, {8, 16, 32, 64, 128}).slope, 4.0, 0.3);
}
