#include <gtest/gtest.h>

#include <cmath>

#include "slender/bessel.hpp"
#include "slender/errors.hpp"
#include "slender/spectra.hpp"

using namespace slender;

TEST(Mode, Validation) {
    EXPECT_THROW(Mode(0, 0.1), DomainError);
    EXPECT_THROW(Mode(1, 0.0), DomainError);
    EXPECT_THROW(Mode(1, 0.5), DomainError);
    EXPECT_NEAR(Mode(-3, 0.01).z(), 0.03 * kPi, 1e-16);
}

TEST(EigenFamily, RejectedCombinations) {
    EXPECT_THROW(EigenFamily::pde(Setting::laplace, Direction::tangential).validate(), ConfigError);
    EXPECT_THROW(EigenFamily::pde(Setting::stokes, Direction::longitudinal).validate(), ConfigError);
    EXPECT_THROW(EigenFamily::delta_reg(Setting::stokes, Direction::normal, 1.6).validate(), ConfigError);
    EXPECT_NO_THROW(EigenFamily::delta_reg(Setting::stokes, Direction::normal, 1.7).validate());
    EXPECT_THROW(EigenFamily::delta_reg(Setting::laplace, Direction::longitudinal, 1.0).validate(), ConfigError);
    EXPECT_THROW(parse_setting("fluid"), ConfigError);
    EXPECT_EQ(parse_method("truncated"), Method::sbt_truncated);
}

TEST(Lambda, EvenInK) {
    for (Direction d : {Direction::tangential, Direction::normal})
        for (Method m : {Method::pde, Method::sbt, Method::delta_reg}) {
            EigenFamily f{Setting::stokes, d, m, 2.0, -1};
            for (long k : {1L, 7L, 40L}) EXPECT_EQ(lambda(f, Mode(k, 0.01)), lambda(f, Mode(-k, 0.01)));
        }
}

TEST(Lambda, MatchesOracleBessels) {
    const double z = 0.03 * kPi;
    const auto o = oracle_bessel_k012(z);
    const double k0 = o[0].value, k1 = o[1].value;
    const double bt = z * k1 * k1 / (2 * k0 * k1 + z * (k0 * k0 - k1 * k1));
    EXPECT_NEAR(lambda(EigenFamily::pde(Setting::stokes, Direction::tangential), Mode(3, 0.01)) / (4 * kPi * bt), 1.0,
                1e-13);
    const double b = z * k1 / k0;
    EXPECT_NEAR(lambda(EigenFamily::pde(Setting::laplace, Direction::longitudinal), Mode(3, 0.01)) / (2 * kPi * b),
                1.0, 1e-13);
}

TEST(Lambda, PrefactorConsistency) {
    const std::pair<long, double> modes[] = {{1, 0.003}, {10, 0.01}, {32, 0.01}, {400, 0.004}};
    for (const auto& [k, eps] : modes) {
        const Mode m(k, eps);
        const double ln = lambda(EigenFamily::pde(Setting::stokes, Direction::normal), m);
        EXPECT_NEAR(ln, 2 * kPi * b_function(OdeFamily::B_n, m.z()), 1e-13 * ln);
        const double lt = lambda(EigenFamily::delta_reg(Setting::stokes, Direction::tangential, 2.0), m);
        EXPECT_NEAR(lt, 4 * kPi * b_function(OdeFamily::B_delta_t, m.z(), 2.0), 1e-13 * lt);
    }
}

TEST(Lambda, SbtSignChangeAndPole) {
    const double eps = 0.01;
    const auto fam = EigenFamily::sbt(Setting::stokes, Direction::normal);
    const double kc = sign_change_wavenumber(fam, eps);
    EXPECT_NEAR(kc, 2.0 / (kPi * eps) * std::exp(-kGamma + 0.5), 1e-9);
    EXPECT_GT(lambda(fam, Mode(long(std::floor(kc)), eps)), 0.0);
    EXPECT_LT(lambda(fam, Mode(long(std::ceil(kc)), eps)), 0.0);

    // place the pole exactly on k = 1
    const double eps_pole = sbt_singularity_z(Direction::longitudinal) / kPi;
    EXPECT_THROW(inverse_lambda(EigenFamily::sbt(Setting::laplace, Direction::longitudinal), Mode(1, eps_pole)),
                 PoleError);
}

TEST(Lambda, TruncationCutoffs) {
    const double eps = 0.01;
    EXPECT_EQ(default_cutoff(Direction::tangential, eps), long(std::floor(1 / (4 * kPi * eps))));
    EXPECT_EQ(default_cutoff(Direction::normal, eps), long(std::floor(73 / (100 * kPi * eps))));
    const auto f = EigenFamily::truncated(Setting::stokes, Direction::tangential);
    const long n = effective_cutoff(f, eps);
    EXPECT_GT(lambda(f, Mode(n, eps)), 0.0);
    EXPECT_EQ(lambda(f, Mode(n + 1, eps)), 0.0);
    EXPECT_EQ(inverse_lambda(f, Mode(n + 1, eps)), 0.0);
}

TEST(Lambda, HarmonicAndLogFormsAgreeAtLargeK) {
    // the harmonic and log forms of the periodic symbol differ by O(1/k^2)
    const double eps = 1e-3;
    for (long k : {20L, 50L}) {
        const Mode m(k, eps);
        EXPECT_NEAR(lambda_sbt_harmonic(Direction::longitudinal, m),
                    lambda(EigenFamily::sbt(Setting::laplace, Direction::longitudinal), m), 1e-3);
    }
}

TEST(Lambda, GrowthBounds) {
    const double eps[2] = {1e-2, 1e-3};
    for (Direction d : {Direction::longitudinal, Direction::tangential, Direction::normal})
        EXPECT_TRUE(check_growth_bounds(d, eps, 2000).ok);
}

TEST(BFunction, OdeConsistency) {
    for (OdeFamily f : {OdeFamily::B, OdeFamily::B_SB, OdeFamily::B_t, OdeFamily::B_SB_t, OdeFamily::B_n,
                        OdeFamily::B_SB_n, OdeFamily::B_delta, OdeFamily::B_delta_t, OdeFamily::B_delta_n})
        for (double z : {0.05, 0.2, 0.4}) {
            const double h = 1e-5 * z, delta = 2.0;
            const double d = (b_function(f, z + h, delta) - b_function(f, z - h, delta)) / (2 * h);
            const double rhs = ode_rhs(f, z, b_function(f, z, delta), delta);
            EXPECT_NEAR(d, rhs, 1e-6 * (1 + std::abs(rhs))) << to_string(f) << " z=" << z;
        }
}

TEST(BFunction, ValueAtZeroLimitAndPoles) {
    EXPECT_LT(b_function(OdeFamily::B, 1e-12), 0.05);
    EXPECT_THROW(b_function(OdeFamily::B_SB, 0.0), DomainError);
    EXPECT_THROW(b_function(OdeFamily::B_SB_n, 5.0), DomainError);
    EXPECT_THROW(b_function(OdeFamily::B_SB, sbt_singularity_z(Direction::longitudinal)), PoleError);
    EXPECT_NO_THROW(b_function(OdeFamily::B_SB_n, 5.0, 0, true));
}

TEST(Gronwall, PrintedConstants) {
    const auto g = gronwall_constants();
    EXPECT_NEAR(g.c_B, 1.9339, 1e-4);
    EXPECT_NEAR(g.c_t, 0.905, 1e-3);
    EXPECT_NEAR(g.c_n, 3.916, 1e-3);
    EXPECT_NEAR(g.c_l2, 1.8753, 5e-4);
    EXPECT_NEAR(g.c_t2, 0.9835, 5e-4);
    EXPECT_NEAR(g.c_n2, 3.8765, 5e-4);
    EXPECT_NEAR(g.A1, 0.6995, 1e-3);
}

TEST(Difference, WithinWindowsAndErrors) {
    for (double eps : {0.1, 0.01}) {
        const long w = long(difference_window(Setting::stokes, Direction::normal, Method::sbt, eps));
        for (long k = 1; k <= w; ++k)
            EXPECT_GT(eigen_difference_margin(Setting::stokes, Direction::normal, eps, k, Method::sbt).margin, 0.0);
    }
    const long w = long(difference_window(Setting::laplace, Direction::longitudinal, Method::sbt, 0.01));
    EXPECT_THROW(eigen_difference_margin(Setting::laplace, Direction::longitudinal, 0.01, w + 1, Method::sbt),
                 WindowError);
    EXPECT_THROW(eigen_difference_margin(Setting::laplace, Direction::longitudinal, 0.01, 1, Method::pde),
                 ConfigError);
    for (long k : {1L, 100L, 10000L})
        EXPECT_GT(eigen_difference_high_k(Setting::stokes, Direction::tangential, 0.01, k, 2.0).margin, 0.0);
}

TEST(HFunction, Bound) {
    std::vector<double> z;
    for (int i = 1; i <= 2000; ++i) z.push_back(20.0 * i / 2000.0);
    EXPECT_TRUE(check_h_bound(z).ok);
    const auto p = h_parts(1.0);
    EXPECT_NEAR(h_function(1.0), 0.125 * p.n3 / p.d3, 1e-15);
}

TEST(AppendixA, LegendreAndSTransform) {
    EXPECT_NEAR(legendre_p(3, 0.5), -0.4375, 1e-15);
    EXPECT_NEAR(legendre_mu(2), 3.0, 1e-15);
    const auto nodes = s_transform_nodes(512);
    for (int k = 1; k <= 5; ++k) {
        std::vector<double> phi;
        for (double t : nodes) phi.push_back(legendre_p(k, t));
        const auto r = s_transform_apply(phi);
        double num = 0, den = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            num += r.values[i] * phi[i];
            den += phi[i] * phi[i];
        }
        EXPECT_NEAR(-num / den / legendre_mu(k), 1.0, 0.01);
    }
    EXPECT_TRUE(s_transform_apply(std::vector<double>(32, 1.0)).coarse);
}

TEST(AppendixA, PeriodicKernelAndIdentity) {
    for (long k = 1; k <= 8; ++k)
        EXPECT_NEAR(periodic_kernel_quadrature(k) / -periodic_kernel_eigenvalue(k), 1.0, 1e-8);
    const auto id = periodization_identity_check();
    EXPECT_NEAR(id.exact, -2 * std::log(kPi / 4), 1e-15);
    EXPECT_LT(id.error, 1e-8);
}

TEST(AppendixC, ExactRationals) {
    EXPECT_EQ(to_string(g2_rational(3, 2)), "646907/163840");
    EXPECT_EQ(to_string(g3_rational(1, 1)), "3881062/455625");
    EXPECT_NEAR(g2(1.5), 646907.0 / 163840.0, 1e-12);
    EXPECT_NEAR(g3(1.0), 3881062.0 / 455625.0, 1e-12);
}
