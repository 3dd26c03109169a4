#include "slender/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "slender/errors.hpp"

namespace slender {

LinearFit least_squares_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw ShapeError("fit needs two or more matching points");
    const double n = double(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (f.intercept + f.slope * x[i]);
        r += e * e;
    }
    f.residual = std::sqrt(r / n);
    return f;
}

const char* to_string(Regularity r) { return r == Regularity::H1 ? "H1" : "H2"; }

Regularity parse_regularity(const std::string& s) {
    if (s == "H1" || s == "h1") return Regularity::H1;
    if (s == "H2" || s == "h2") return Regularity::H2;
    throw ConfigError("unknown regularity '" + s + "'");
}

std::vector<double> default_eps_grid() {
    std::vector<double> g(6);
    for (int i = 0; i < 6; ++i) g[i] = std::pow(10.0, -1.5 - 1.5 * double(i) / 5.0);
    return g;
}

long resolution_for(double eps) { return long(std::ceil(64.0 / eps)); }

double tracked_ratio(Setting s, Regularity r) {
    if (s == Setting::stokes) return r == Regularity::H1 ? 0.1 : 0.085;
    return r == Regularity::H1 ? 2.0 : 4.5;
}

namespace {

void check_grid(const std::vector<double>& eps_grid) {
    if (eps_grid.size() < 4) throw ConfigError("eps grid needs at least 4 points");
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        if (!(eps_grid[i] > 0) || !(eps_grid[i] < 0.5)) throw DomainError("eps values must lie in (0, 1/2)");
        if (i > 0 && !(eps_grid[i] < eps_grid[i - 1])) throw ConfigError("eps grid must be strictly decreasing");
    }
}

long pick_resolution(double eps, long override_k) {
    const long need = long(std::ceil(2.0 / (kPi * eps)));
    const long k = override_k > 0 ? override_k : resolution_for(eps);
    if (k < need)
        throw ResolutionError("k_max = " + std::to_string(k) + " does not resolve the 1/eps cutoffs at eps = " +
                              std::to_string(eps) + " (need >= " + std::to_string(need) + ")");
    return k;
}

EigenFamily approx_family(Setting setting, Method method, double delta) {
    const Direction d = setting == Setting::laplace ? Direction::longitudinal : Direction::tangential;
    switch (method) {
    case Method::sbt_truncated: return EigenFamily::truncated(setting, d);
    case Method::delta_reg: return EigenFamily::delta_reg(setting, d, delta);
    case Method::sbt: return EigenFamily::sbt(setting, d);
    case Method::pde: break;
    }
    throw ConfigError("convergence studies compare the PDE map against sbt_truncated, sbt or delta_reg");
}

} // namespace

ConvergenceReport convergence_study(Setting setting, Method method, Regularity regularity,
                                    const std::vector<double>& eps_grid, std::uint64_t seed, double delta,
                                    long k_max_override) {
    check_grid(eps_grid);
    ConvergenceReport rep;
    rep.setting = setting;
    rep.method = method;
    rep.regularity = regularity;
    rep.seed = seed;
    if (method == Method::delta_reg && !(delta > 0)) delta = optimal_delta(setting, tracked_ratio(setting, regularity));
    rep.delta = method == Method::delta_reg ? delta : 0.0;
    const EigenFamily approx = approx_family(setting, method, delta);
    const Direction d0 = setting == Setting::laplace ? Direction::longitudinal : Direction::tangential;
    const EigenFamily pde = EigenFamily::pde(setting, d0);
    const int comps = setting == Setting::laplace ? 1 : 3;
    const FieldProfile profile = regularity == Regularity::H1 ? FieldProfile::h1_rough : FieldProfile::h2_rough;
    const double s = regularity == Regularity::H1 ? 1.0 : 2.0;

    std::vector<double> lx, ly;
    for (double eps : eps_grid) {
        const long K = pick_resolution(eps, k_max_override);
        PeriodicField u = make_test_field(profile, K, seed, comps);
        u = u.scaled(1.0 / sobolev_norm(u, s));
        const PeriodicField diff = apply_operator(pde, eps, u, true) - apply_operator(approx, eps, u, true);
        const double err = sobolev_norm(diff, 0.0);
        if (!(err > 0)) throw AccuracyError("zero error: the approximation reproduced the PDE map exactly", err);
        rep.eps.push_back(eps);
        rep.errors.push_back(err);
        rep.k_max.push_back(K);
        lx.push_back(std::log(eps));
        ly.push_back(std::log(err));
    }
    const LinearFit fit = least_squares_fit(lx, ly);
    rep.slope = fit.slope;
    rep.residual = fit.residual;
    return rep;
}

WellposednessReport wellposedness_constant(Setting setting, const std::vector<double>& eps_grid, std::uint64_t seed,
                                           FieldProfile profile, long k_max_override) {
    check_grid(eps_grid);
    WellposednessReport rep;
    rep.setting = setting;
    rep.profile = profile;
    const Direction d0 = setting == Setting::laplace ? Direction::longitudinal : Direction::tangential;
    const EigenFamily pde = EigenFamily::pde(setting, d0);
    const int comps = setting == Setting::laplace ? 1 : 3;
    double lo = 0, hi = 0;
    for (double eps : eps_grid) {
        const long K = pick_resolution(eps, k_max_override);
        const PeriodicField u = make_test_field(profile, K, seed, comps);
        const double v =
            sobolev_norm(apply_operator(pde, eps, u, true), 0.0) * std::abs(std::log(eps)) / sobolev_norm(u, 1.0);
        rep.eps.push_back(eps);
        rep.values.push_back(v);
        lo = rep.values.size() == 1 ? v : std::min(lo, v);
        hi = std::max(hi, v);
    }
    rep.spread = hi / lo;
    return rep;
}

double optimal_delta_lhs(Setting setting, double delta) {
    const double ld = std::log(delta);
    if (setting == Setting::stokes) {
        const double a = -1.0 + 2.0 * ld;
        return delta * delta * a * a * (1.5 + ld);
    }
    return delta * delta * ld * ld * (3.0 + 2.0 * ld);
}

double optimal_delta(Setting setting, double ratio) {
    if (!(ratio > 0) || !std::isfinite(ratio)) throw DomainError("C2/C1 must be a positive finite number");
    const double floor = setting == Setting::stokes ? std::exp(0.5) : 1.0;
    double lo = floor, hi = floor + 1.0;
    while (optimal_delta_lhs(setting, hi) < ratio) {
        lo = hi;
        hi = floor + 2.0 * (hi - floor);
    }
    // the left side increases monotonically from 0 on the domain
    while (hi - lo > 1e-13 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (optimal_delta_lhs(setting, mid) < ratio) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> cdelta_profile(Setting setting, const std::vector<double>& delta_grid, double c1, double c2) {
    const double floor = setting == Setting::stokes ? std::exp(0.5) : 1.0;
    std::vector<double> out;
    out.reserve(delta_grid.size());
    for (double d : delta_grid) {
        if (!(d > floor))
            throw DomainError("delta = " + std::to_string(d) + " is outside the admissible range (" +
                              std::to_string(floor) + ", inf)");
        const double ld = std::log(d);
        const double second = setting == Setting::stokes ? c2 / (-1.0 + 2.0 * ld) : c2 / ld;
        out.push_back(c1 * d * d * (1.0 + ld) + second);
    }
    return out;
}

std::string report_to_json(const ConvergenceReport& r) {
    nlohmann::ordered_json j;
    j["setting"] = to_string(r.setting);
    j["method"] = to_string(r.method);
    if (r.method == Method::delta_reg) j["delta"] = r.delta;
    j["regularity"] = to_string(r.regularity);
    j["eps"] = r.eps;
    j["errors"] = r.errors;
    j["k_max"] = r.k_max;
    j["slope"] = r.slope;
    j["residual"] = r.residual;
    j["seed"] = r.seed;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const ConvergenceReport& r) {
    std::ostringstream os;
    os << std::setprecision(17) << std::scientific;
    os << "setting,method,delta,regularity,seed,eps,k_max,error\n";
    for (std::size_t i = 0; i < r.eps.size(); ++i)
        os << to_string(r.setting) << "," << to_string(r.method) << "," << r.delta << "," << to_string(r.regularity)
           << "," << r.seed << "," << r.eps[i] << "," << r.k_max[i] << "," << r.errors[i] << "\n";
    return os.str();
}

} // namespace slender
