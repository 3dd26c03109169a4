#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slender/spectra.hpp"

namespace slender {

// f(z) = sum_k fhat_k e^{i pi k z} on the period-2 torus, |k| <= k_max.
// Vector fields carry three components ordered x, y, z.
class PeriodicField {
public:
    PeriodicField() = default;
    PeriodicField(int components, long k_max);

    int components() const { return int(coeffs_.size()); }
    long k_max() const { return k_max_; }

    std::complex<double>& at(int c, long k) { return coeffs_[c][std::size_t(k + k_max_)]; }
    const std::complex<double>& at(int c, long k) const { return coeffs_[c][std::size_t(k + k_max_)]; }
    std::span<std::complex<double>> component(int c) { return coeffs_[c]; }
    std::span<const std::complex<double>> component(int c) const { return coeffs_[c]; }

    bool is_real(double tol = 1e-12) const;
    PeriodicField scaled(double a) const;

private:
    long k_max_ = 0;
    std::vector<std::vector<std::complex<double>>> coeffs_;
};

PeriodicField operator+(const PeriodicField& a, const PeriodicField& b);
PeriodicField operator-(const PeriodicField& a, const PeriodicField& b);

// Uniform grid z_j = -1 + 2j/n, n = 2 k_max + 2. The Nyquist mode k = n/2 is
// not represented and is discarded by analyze.
std::vector<double> synthesis_grid(std::size_t n);
PeriodicField analyze(std::span<const double> samples);
PeriodicField analyze(std::span<const std::complex<double>> samples);
std::vector<std::complex<double>> synthesize(const PeriodicField& field, int component, std::size_t n);
std::vector<double> synthesize_real(const PeriodicField& field, int component, std::size_t n);

// Coefficient-wise lambda (inverse = true: velocity -> force) or 1/lambda.
// Vector fields: z uses the tangential family, x and y the normal family.
PeriodicField apply_operator(const EigenFamily& family, double eps, const PeriodicField& field, bool inverse);

// ||f||_{H^s}^2 = 2 sum_k (1 + pi^2 k^2)^s |fhat_k|^2, summed over components.
double sobolev_norm(const PeriodicField& field, double s);
// L2 inner product 2 sum_k a_k conj(b_k).
std::complex<double> inner_product(const PeriodicField& a, const PeriodicField& b);

enum class FieldProfile { h1_rough, h2_rough, smooth, single_mode };
FieldProfile parse_profile(const std::string& s);
const char* to_string(FieldProfile p);

// Deterministic real test field; mode_k is used by single_mode only.
PeriodicField make_test_field(FieldProfile profile, long k_max, std::uint64_t seed, int components = 1,
                              long mode_k = 1);

std::string field_to_csv(const PeriodicField& f);
std::string field_to_json(const PeriodicField& f);

} // namespace slender
