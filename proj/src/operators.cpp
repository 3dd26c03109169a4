#include "slender/operators.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>

#include "json.hpp"
#include "slender/errors.hpp"

namespace slender {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// In-place complex DFT of length n; sign -1 forward, +1 backward (unnormalised).
void dft(std::vector<std::complex<double>>& data, int sign) {
    const int n = int(data.size());
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, p, p, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
}

void require_grid(std::size_t n) {
    if (n < 4 || n % 2 != 0) throw ShapeError("grid size must be even and >= 4, got " + std::to_string(n));
}

void require_same_shape(const PeriodicField& a, const PeriodicField& b) {
    if (a.components() != b.components() || a.k_max() != b.k_max())
        throw ShapeError("fields have different shapes");
}

double parity(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

} // namespace

PeriodicField::PeriodicField(int components, long k_max) : k_max_(k_max) {
    if (components != 1 && components != 3) throw ShapeError("fields have 1 or 3 components");
    if (k_max < 0) throw ShapeError("k_max must be >= 0");
    coeffs_.assign(std::size_t(components), std::vector<std::complex<double>>(std::size_t(2 * k_max + 1)));
}

bool PeriodicField::is_real(double tol) const {
    for (int c = 0; c < components(); ++c)
        for (long k = 0; k <= k_max_; ++k)
            if (std::abs(at(c, k) - std::conj(at(c, -k))) > tol) return false;
    return true;
}

PeriodicField PeriodicField::scaled(double a) const {
    PeriodicField out = *this;
    for (auto& comp : out.coeffs_)
        for (auto& v : comp) v *= a;
    return out;
}

PeriodicField operator+(const PeriodicField& a, const PeriodicField& b) {
    require_same_shape(a, b);
    PeriodicField out = a;
    for (int c = 0; c < a.components(); ++c)
        for (long k = -a.k_max(); k <= a.k_max(); ++k) out.at(c, k) += b.at(c, k);
    return out;
}

PeriodicField operator-(const PeriodicField& a, const PeriodicField& b) { return a + b.scaled(-1.0); }

std::vector<double> synthesis_grid(std::size_t n) {
    require_grid(n);
    std::vector<double> z(n);
    for (std::size_t j = 0; j < n; ++j) z[j] = -1.0 + 2.0 * double(j) / double(n);
    return z;
}

PeriodicField analyze(std::span<const std::complex<double>> samples) {
    const std::size_t n = samples.size();
    require_grid(n);
    for (const auto& v : samples)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ShapeError("samples must be finite");
    std::vector<std::complex<double>> buf(samples.begin(), samples.end());
    dft(buf, -1);
    const long K = long(n / 2) - 1;
    PeriodicField f(1, K);
    for (long k = -K; k <= K; ++k) {
        const std::size_t m = std::size_t((k + long(n)) % long(n));
        f.at(0, k) = parity(k) * buf[m] / double(n);
    }
    return f;
}

PeriodicField analyze(std::span<const double> samples) {
    std::vector<std::complex<double>> c(samples.begin(), samples.end());
    return analyze(std::span<const std::complex<double>>(c));
}

std::vector<std::complex<double>> synthesize(const PeriodicField& field, int component, std::size_t n) {
    require_grid(n);
    if (component < 0 || component >= field.components()) throw ShapeError("no such component");
    if (long(n) < 2 * field.k_max() + 2)
        throw ShapeError("grid of " + std::to_string(n) + " points cannot carry |k| <= " + std::to_string(field.k_max()));
    std::vector<std::complex<double>> buf(n);
    for (long k = -field.k_max(); k <= field.k_max(); ++k)
        buf[std::size_t((k + long(n)) % long(n))] += parity(k) * field.at(component, k);
    dft(buf, +1);
    return buf;
}

std::vector<double> synthesize_real(const PeriodicField& field, int component, std::size_t n) {
    const auto c = synthesize(field, component, n);
    std::vector<double> out(c.size());
    std::transform(c.begin(), c.end(), out.begin(), [](const std::complex<double>& v) { return v.real(); });
    return out;
}

PeriodicField apply_operator(const EigenFamily& family, double eps, const PeriodicField& field, bool inverse) {
    const bool vector = field.components() == 3;
    if (vector && family.setting != Setting::stokes)
        throw ConfigError("vector fields need the stokes setting");
    if (!vector && family.setting != Setting::laplace)
        throw ConfigError("scalar fields need the laplace setting");
    double peak = 0;
    for (int c = 0; c < field.components(); ++c)
        for (const auto& v : field.component(c)) peak = std::max(peak, std::abs(v));
    for (int c = 0; c < field.components(); ++c)
        if (std::abs(field.at(c, 0)) > 1e-13 * peak)
            throw MeanModeError("the k = 0 coefficient must vanish before applying the operator");

    PeriodicField out(field.components(), field.k_max());
    for (int c = 0; c < field.components(); ++c) {
        const Direction d = !vector ? Direction::longitudinal : c == 2 ? Direction::tangential : Direction::normal;
        const EigenFamily fam = family.with_direction(d);
        for (long k = 1; k <= field.k_max(); ++k) {
            const std::complex<double> a = field.at(c, k), b = field.at(c, -k);
            if (a == 0.0 && b == 0.0) continue;
            const Mode m(k, eps);
            const double mult = inverse ? lambda(fam, m) : inverse_lambda(fam, m);
            out.at(c, k) = mult * a;
            out.at(c, -k) = mult * b;
        }
    }
    return out;
}

double sobolev_norm(const PeriodicField& field, double s) {
    if (!(s >= 0)) throw DomainError("Sobolev order must be >= 0");
    double acc = 0;
    for (int c = 0; c < field.components(); ++c)
        for (long k = -field.k_max(); k <= field.k_max(); ++k) {
            const double w = std::pow(1.0 + kPi * kPi * double(k) * double(k), s);
            acc += w * std::norm(field.at(c, k));
        }
    return std::sqrt(2.0 * acc);
}

std::complex<double> inner_product(const PeriodicField& a, const PeriodicField& b) {
    require_same_shape(a, b);
    std::complex<double> acc = 0;
    for (int c = 0; c < a.components(); ++c)
        for (long k = -a.k_max(); k <= a.k_max(); ++k) acc += a.at(c, k) * std::conj(b.at(c, k));
    return 2.0 * acc;
}

FieldProfile parse_profile(const std::string& s) {
    if (s == "h1_rough" || s == "H1") return FieldProfile::h1_rough;
    if (s == "h2_rough" || s == "H2") return FieldProfile::h2_rough;
    if (s == "smooth") return FieldProfile::smooth;
    if (s == "single_mode") return FieldProfile::single_mode;
    throw ConfigError("unknown field profile '" + s + "'");
}

const char* to_string(FieldProfile p) {
    switch (p) {
    case FieldProfile::h1_rough: return "h1_rough";
    case FieldProfile::h2_rough: return "h2_rough";
    case FieldProfile::smooth: return "smooth";
    case FieldProfile::single_mode: return "single_mode";
    }
    return "?";
}

PeriodicField make_test_field(FieldProfile profile, long k_max, std::uint64_t seed, int components, long mode_k) {
    if (k_max < 8) throw ShapeError("test fields need k_max >= 8");
    PeriodicField f(components, k_max);
    if (profile == FieldProfile::single_mode) {
        const long k = mode_k < 0 ? -mode_k : mode_k;
        if (k == 0 || k > k_max) throw ShapeError("single mode outside 1..k_max");
        for (int c = 0; c < components; ++c) f.at(c, k) = f.at(c, -k) = 1.0;
        return f;
    }
    const double decay = profile == FieldProfile::h1_rough ? 1.6 : 2.6;
    for (int c = 0; c < components; ++c) {
        // one stream per component so a larger k_max only appends modes
        std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * std::uint64_t(c + 1)));
        for (long k = 1; k <= k_max; ++k) {
            const double u = double(rng() >> 11) * 0x1.0p-53;
            const double phase = 2.0 * kPi * u;
            const double amp = profile == FieldProfile::smooth ? std::exp(-double(k) / 4.0)
                                                               : std::pow(double(k), -decay);
            const std::complex<double> v = std::polar(amp, phase);
            f.at(c, k) = v;
            f.at(c, -k) = std::conj(v);
        }
    }
    return f;
}

std::string field_to_csv(const PeriodicField& f) {
    std::ostringstream os;
    os << std::setprecision(17) << std::scientific;
    static const char* names[3] = {"x", "y", "z"};
    os << "k";
    for (int c = 0; c < f.components(); ++c) {
        if (f.components() == 1) os << ",re,im";
        else os << "," << names[c] << "_re," << names[c] << "_im";
    }
    os << "\n";
    for (long k = -f.k_max(); k <= f.k_max(); ++k) {
        os << k;
        for (int c = 0; c < f.components(); ++c) os << "," << f.at(c, k).real() << "," << f.at(c, k).imag();
        os << "\n";
    }
    return os.str();
}

std::string field_to_json(const PeriodicField& f) {
    nlohmann::json j;
    j["components"] = f.components();
    j["k_max"] = f.k_max();
    nlohmann::json comps = nlohmann::json::array();
    for (int c = 0; c < f.components(); ++c) {
        nlohmann::json arr = nlohmann::json::array();
        for (long k = -f.k_max(); k <= f.k_max(); ++k) arr.push_back({f.at(c, k).real(), f.at(c, k).imag()});
        comps.push_back(arr);
    }
    j["coeffs"] = comps;
    return j.dump();
}

} // namespace slender
