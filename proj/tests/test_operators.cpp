#include <gtest/gtest.h>

#include <cmath>

#include "slender/errors.hpp"
#include "slender/operators.hpp"

using namespace slender;

TEST(Field, ParsevalAndNorms) {
    PeriodicField f(1, 4);
    f.at(0, 1) = f.at(0, -1) = 1.0;
    EXPECT_NEAR(sobolev_norm(f, 0), 2.0, 1e-15);
    EXPECT_NEAR(inner_product(f, f).real(), 4.0, 1e-15);
    EXPECT_NEAR(sobolev_norm(f, 1), 2.0 * std::sqrt(1 + kPi * kPi), 1e-13);
}

TEST(Field, AnalyzeCosine) {
    const std::size_t n = 16;
    const auto z = synthesis_grid(n);
    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = std::cos(kPi * z[j]);
    const auto f = analyze(s);
    EXPECT_NEAR(std::abs(f.at(0, 1) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.at(0, -1) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(f.at(0, 0)), 0.0, 1e-15);
    for (auto& v : s) v = 3.0;
    EXPECT_NEAR(analyze(s).at(0, 0).real(), 3.0, 1e-15);
}

TEST(Field, RoundTrip) {
    const auto f = make_test_field(FieldProfile::h1_rough, 64, 11);
    const std::size_t n = 2 * 64 + 2;
    const auto back = analyze(synthesize_real(f, 0, n));
    double err = 0;
    for (long k = -64; k <= 64; ++k) err = std::max(err, std::abs(back.at(0, k) - f.at(0, k)));
    EXPECT_LT(err, 1e-12);
}

TEST(Field, TestFieldProperties) {
    const auto a = make_test_field(FieldProfile::h1_rough, 32, 5), b = make_test_field(FieldProfile::h1_rough, 32, 5);
    for (long k = -32; k <= 32; ++k) EXPECT_EQ(a.at(0, k), b.at(0, k));
    EXPECT_TRUE(a.is_real());
    EXPECT_NEAR(std::abs(a.at(0, 3)), std::pow(3.0, -1.6), 1e-15);
    // H1 converges, H2 grows as k_max doubles
    const double h1a = sobolev_norm(make_test_field(FieldProfile::h1_rough, 4096, 1), 1);
    const double h1b = sobolev_norm(make_test_field(FieldProfile::h1_rough, 8192, 1), 1);
    EXPECT_NEAR(h1b / h1a, 1.0, 0.02);
    const double h2a = sobolev_norm(make_test_field(FieldProfile::h1_rough, 4096, 1), 2);
    const double h2b = sobolev_norm(make_test_field(FieldProfile::h1_rough, 8192, 1), 2);
    EXPECT_GT(h2b / h2a, 1.3);
    EXPECT_THROW(make_test_field(FieldProfile::smooth, 4, 1), ShapeError);
}

TEST(Operator, DiagonalAndInverse) {
    const double eps = 0.01;
    const auto u = make_test_field(FieldProfile::smooth, 16, 3, 3);
    const auto fam = EigenFamily::pde(Setting::stokes, Direction::tangential);
    const auto back = apply_operator(fam, eps, apply_operator(fam, eps, u, true), false);
    for (int c = 0; c < 3; ++c)
        for (long k = -16; k <= 16; ++k) EXPECT_NEAR(std::abs(back.at(c, k) - u.at(c, k)), 0.0, 1e-14);
    const auto f = apply_operator(fam, eps, u, true);
    const double lz = lambda(EigenFamily::pde(Setting::stokes, Direction::tangential), Mode(2, eps));
    const double lx = lambda(EigenFamily::pde(Setting::stokes, Direction::normal), Mode(2, eps));
    EXPECT_NEAR(std::abs(f.at(2, 2) - lz * u.at(2, 2)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(f.at(0, 2) - lx * u.at(0, 2)), 0.0, 1e-14);
}

TEST(Operator, Errors) {
    auto u = make_test_field(FieldProfile::smooth, 16, 3);
    u.at(0, 0) = 1.0;
    EXPECT_THROW(apply_operator(EigenFamily::pde(Setting::laplace, Direction::longitudinal), 0.01, u, true),
                 MeanModeError);
    const auto v = make_test_field(FieldProfile::smooth, 16, 3, 3);
    EXPECT_THROW(apply_operator(EigenFamily::pde(Setting::laplace, Direction::longitudinal), 0.01, v, true),
                 ConfigError);
    std::vector<double> odd(7, 0.0);
    EXPECT_THROW(analyze(odd), ShapeError);
    EXPECT_THROW(synthesize(v, 0, 8), ShapeError);
}

TEST(Operator, TruncatedZeroesHighModes) {
    const double eps = 0.01;
    const auto u = make_test_field(FieldProfile::h1_rough, 64, 2);
    const auto fam = EigenFamily::truncated(Setting::laplace, Direction::longitudinal);
    const auto f = apply_operator(fam, eps, u, true);
    const long n = effective_cutoff(fam, eps);
    EXPECT_NE(f.at(0, n), 0.0);
    EXPECT_EQ(f.at(0, n + 1), 0.0);
}

TEST(Serialization, CsvAndJson) {
    PeriodicField f(1, 1);
    f.at(0, 1) = {1, 2};
    const auto csv = field_to_csv(f);
    EXPECT_EQ(csv.substr(0, 8), "k,re,im\n");
    EXPECT_NE(field_to_json(f).find("\"k_max\":1"), std::string::npos);
}
