#include "slender/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "slender/bessel.hpp"
#include "slender/dynamics.hpp"
#include "slender/errors.hpp"
#include "slender/experiments.hpp"
#include "slender/operators.hpp"
#include "slender/profiles.hpp"
#include "slender/spectra.hpp"

namespace slender::cli {

namespace {

// Thrown for bad user input detected after CLI11 parsing.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string output;
    std::string format = "csv";

    std::string setting = "stokes";
    std::string direction;   // empty: longitudinal for laplace, tangential for stokes
    std::string method;      // empty: wide pde/sbt/delta table
    double eps = 0.01;
    double delta = 0;        // 0: 2 for spectrum tables, optimal for converge
    std::string k_range = "1..50";

    std::string suite = "all";

    std::string regularity = "H1";
    std::uint64_t seed = kSeeds[0];
    std::vector<double> eps_grid;
    long k_max = 0;

    double ratio = 0;
    double c1 = 1, c2 = 0;
    std::string delta_grid;

    double dt = 0;
    int steps = 100;
    std::string scheme = "implicit";
    std::vector<long> sweep;

    double r_max = 0;
    int points = 200;
    long k = 1;
};

std::pair<long, long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const long v = std::stol(s);
            return {v, v};
        }
        return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("bad range '" + s + "' (expected a..b or a single integer)");
    }
}

struct DeltaGrid {
    double lo, hi;
    int n;
};

DeltaGrid parse_delta_grid(const std::string& s) {
    // lo..hi:n
    const auto dots = s.find(".."), colon = s.rfind(':');
    if (dots == std::string::npos || colon == std::string::npos || colon < dots)
        throw UsageError("bad delta grid '" + s + "' (expected lo..hi:n)");
    try {
        DeltaGrid g{std::stod(s.substr(0, dots)), std::stod(s.substr(dots + 2, colon - dots - 2)),
                    std::stoi(s.substr(colon + 1))};
        if (g.n < 2 || !(g.hi > g.lo)) throw UsageError("delta grid needs hi > lo and n >= 2");
        return g;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("bad delta grid '" + s + "'");
    }
}

Direction default_direction(Setting s, const std::string& d) {
    if (!d.empty()) return parse_direction(d);
    return s == Setting::laplace ? Direction::longitudinal : Direction::tangential;
}

std::string sci(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << std::scientific << v;
    return os.str();
}

// Routes tabular output to --output, $SLENDER_OUTPUT_DIR/<name>, or the stream.
class Sink {
public:
    Sink(const RunConfig& cfg, const std::string& name, std::ostream& fallback) : os_(&fallback) {
        std::string path = cfg.output;
        if (path.empty()) {
            if (const char* dir = std::getenv("SLENDER_OUTPUT_DIR"); dir && *dir)
                path = (std::filesystem::path(dir) / (name + "." + cfg.format)).string();
        }
        if (!path.empty()) {
            const auto parent = std::filesystem::path(path).parent_path();
            if (!parent.empty()) std::filesystem::create_directories(parent);
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
            os_ = &file_;
        }
    }
    std::ostream& os() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

// ---- spectrum -------------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    const Setting s = parse_setting(cfg.setting);
    const Direction d = default_direction(s, cfg.direction);
    const auto [k0, k1] = parse_range(cfg.k_range);
    if (k0 < 1 || k1 < k0) throw UsageError("k range must satisfy 1 <= a <= b");
    const double delta = cfg.delta > 0 ? cfg.delta : 2.0;

    std::vector<EigenFamily> fams;
    if (cfg.method.empty()) {
        fams = {EigenFamily::pde(s, d), EigenFamily::sbt(s, d), EigenFamily::delta_reg(s, d, delta)};
    } else if (cfg.method == "all") {
        fams = {EigenFamily::pde(s, d), EigenFamily::sbt(s, d), EigenFamily::truncated(s, d),
                EigenFamily::delta_reg(s, d, delta)};
    } else {
        const Method m = parse_method(cfg.method);
        fams = {m == Method::pde             ? EigenFamily::pde(s, d)
                : m == Method::sbt           ? EigenFamily::sbt(s, d)
                : m == Method::sbt_truncated ? EigenFamily::truncated(s, d)
                                             : EigenFamily::delta_reg(s, d, delta)};
    }
    for (const auto& f : fams) f.validate();
    (void)Mode(1, cfg.eps);

    if (cfg.format != "csv") throw UsageError("spectrum writes csv only");
    Sink sink(cfg, "spectrum", out);
    std::ostream& os = sink.os();
    if (cfg.method.empty()) {
        os << "setting,direction,delta,eps,k,lambda_pde,lambda_sbt,lambda_delta\n";
        for (long k = k0; k <= k1; ++k) {
            const Mode m(k, cfg.eps);
            os << to_string(s) << "," << to_string(d) << "," << sci(delta) << "," << sci(cfg.eps) << "," << k;
            for (const auto& f : fams) os << "," << sci(lambda(f, m));
            os << "\n";
        }
        return kOk;
    }
    os << "setting,direction,method,delta,eps,k,lambda\n";
    for (const auto& f : fams)
        for (long k = k0; k <= k1; ++k)
            os << to_string(s) << "," << to_string(d) << "," << to_string(f.method) << ","
               << sci(f.method == Method::delta_reg ? f.delta : 0.0) << "," << sci(cfg.eps) << "," << k << ","
               << sci(lambda(f, Mode(k, cfg.eps))) << "\n";
    return kOk;
}

// ---- verify ---------------------------------------------------------------

class Verifier {
public:
    explicit Verifier(std::ostream& os) : os_(os) {}
    void check(const std::string& name, bool ok, const std::string& detail) {
        os_ << (ok ? "ok   " : "FAIL ") << name << ": " << detail << "\n";
        failures_ += ok ? 0 : 1;
    }
    int failures() const { return failures_; }

private:
    std::ostream& os_;
    int failures_ = 0;
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(4) << std::scientific << v;
    return os.str();
}

void suite_bessel(Verifier& v) {
    const auto grid = log_grid(1e-8, 100.0, 2000);
    double worst = 0;
    for (double z : grid) {
        const auto ref = oracle_bessel_k012(z);
        const auto got = bessel_k012_scaled(z);
        const double vals[3] = {got.k0, got.k1, got.k2};
        for (int n = 0; n < 3; ++n) worst = std::max(worst, std::abs(vals[n] / ref[std::size_t(n)].scaled - 1.0));
    }
    v.check("bessel vs oracle (2000 points, orders 0-2)", worst <= 1e-12, "max rel err " + fmt(worst));

    double jump = 0;
    const std::pair<double, std::pair<BesselMethod, BesselMethod>> seams[2] = {
        {kSeriesLimit, {BesselMethod::series, BesselMethod::continued_fraction}},
        {kAsymptoticLimit, {BesselMethod::continued_fraction, BesselMethod::asymptotic}}};
    for (const auto& [z, br] : seams) {
        const auto a = bessel_k012_scaled_branch(z, br.first), b = bessel_k012_scaled_branch(z, br.second);
        jump = std::max({jump, std::abs(a.k0 / b.k0 - 1), std::abs(a.k1 / b.k1 - 1), std::abs(a.k2 / b.k2 - 1)});
    }
    v.check("branch continuity at z = 2, 20", jump <= 1e-13, "max rel jump " + fmt(jump));
}

void suite_inequalities(Verifier& v) {
    const auto zr = log_grid(1e-6, 100.0, 100000);
    const auto rb = check_ratio_bounds(zr);
    v.check("ratio bounds on (1e-6, 100]", rb.ok,
            "min lower margin " + fmt(rb.min_lower) + ", min upper margin " + fmt(rb.min_upper));

    std::vector<double> zs(10000);
    for (std::size_t i = 0; i < zs.size(); ++i) zs[i] = (double(i) + 0.5) / double(zs.size());
    const auto sb = check_small_z_bounds(zs);
    v.check("small-z bounds on (0, 1)", sb.ok,
            "min K0 margin " + fmt(sb.min_k0_margin) + ", min K1 margin " + fmt(sb.min_k1_margin));

    const double eps[4] = {1e-1, 1e-2, 1e-3, 1e-4};
    for (Direction d : {Direction::longitudinal, Direction::tangential, Direction::normal}) {
        const auto g = check_growth_bounds(d, eps, 10000);
        v.check(std::string("growth bounds ") + to_string(d), g.ok,
                "min lower " + fmt(g.min_lower) + ", min upper " + fmt(g.min_upper) + " over " +
                    std::to_string(g.checked) + " modes");
    }

    std::vector<double> zh(10000);
    for (std::size_t i = 0; i < zh.size(); ++i) zh[i] = 20.0 * double(i + 1) / double(zh.size());
    const auto hb = check_h_bound(zh);
    v.check("|h(z)| < 9z/8 on (0, 20]", hb.ok, "min margin " + fmt(hb.min_margin) + " at z = " + fmt(hb.worst_z));

    struct Case {
        Setting s;
        Direction d;
        Method m;
        double delta;
    };
    std::vector<Case> cases = {{Setting::laplace, Direction::longitudinal, Method::sbt, 0},
                               {Setting::stokes, Direction::tangential, Method::sbt, 0},
                               {Setting::stokes, Direction::normal, Method::sbt, 0}};
    for (double dl : {1.7, 2.0, 3.0}) {
        cases.push_back({Setting::laplace, Direction::longitudinal, Method::delta_reg, dl});
        cases.push_back({Setting::stokes, Direction::tangential, Method::delta_reg, dl});
        cases.push_back({Setting::stokes, Direction::normal, Method::delta_reg, dl});
    }
    for (const auto& c : cases) {
        double worst = std::numeric_limits<double>::infinity();
        long count = 0;
        for (double e : {1e-1, 1e-2, 1e-3}) {
            const long w = long(std::floor(difference_window(c.s, c.d, c.m, e)));
            for (long k = 1; k <= w; ++k) {
                const auto dm = eigen_difference_margin(c.s, c.d, e, k, c.m, c.delta);
                worst = std::min(worst, dm.margin / dm.bound);
                ++count;
            }
        }
        std::string name = std::string("difference lemma ") + to_string(c.s) + "/" + to_string(c.d) + "/" +
                           to_string(c.m);
        if (c.m == Method::delta_reg) name += " delta=" + fmt(c.delta);
        v.check(name, count > 0 && worst > 0,
                "min relative margin " + fmt(worst) + " over " + std::to_string(count) + " modes");
    }
}

void suite_oracle(Verifier& v) {
    double worst = 0, worst_res = 0;
    for (double e : {0.1, 0.01})
        for (Direction d : {Direction::longitudinal, Direction::tangential, Direction::normal})
            for (long k = 1; k <= 20; ++k) {
                const Mode m(k, e);
                const Setting s = d == Direction::longitudinal ? Setting::laplace : Setting::stokes;
                const double exact = lambda(EigenFamily::pde(s, d), m);
                worst = std::max(worst, std::abs(traction_eigenvalue_numeric(d, m) / exact - 1.0));
                if (d == Direction::longitudinal) continue;
                const auto sol = solve_mode(d, m);
                for (double r : {e, 1.5 * e, 3 * e}) {
                    worst_res = std::max(worst_res, residual_divergence(sol, r));
                    if (r > e) worst_res = std::max(worst_res, residual_momentum(sol, r).max);
                }
            }
    v.check("traction eigenvalues vs closed form", worst <= 1e-6, "max rel err " + fmt(worst));
    v.check("incompressibility and momentum residuals", worst_res <= 1e-6, "max residual " + fmt(worst_res));
}

void suite_appendix_a(Verifier& v) {
    const auto nodes = s_transform_nodes(512);
    double worst = 0;
    for (int k = 1; k <= 5; ++k) {
        std::vector<double> phi;
        for (double t : nodes) phi.push_back(legendre_p(k, t));
        const auto r = s_transform_apply(phi);
        double num = 0, den = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            num += r.values[i] * phi[i];
            den += phi[i] * phi[i];
        }
        worst = std::max(worst, std::abs(-num / den / legendre_mu(k) - 1.0));
    }
    v.check("S-transform on P_1..P_5 (resolution 512)", worst <= 0.01, "max rel err " + fmt(worst));

    double wp = 0;
    for (long k = 1; k <= 8; ++k)
        wp = std::max(wp, std::abs(periodic_kernel_quadrature(k) / -periodic_kernel_eigenvalue(k) - 1.0));
    v.check("periodic kernel k = 1..8", wp <= 0.01, "max rel err " + fmt(wp));

    const auto id = periodization_identity_check();
    v.check("periodization identity", id.error <= 1e-8, "error " + fmt(id.error));
}

void suite_appendix_c(Verifier& v) {
    const auto a = g2_rational(3, 2), b = g3_rational(1, 1);
    v.check("g2(3/2) = 646907/163840", a.num == 646907 && a.den == 163840, to_string(a));
    v.check("g3(1) = 3881062/455625", b.num == 3881062 && b.den == 455625, to_string(b));
    std::vector<double> zh(10000);
    for (std::size_t i = 0; i < zh.size(); ++i) zh[i] = 20.0 * double(i + 1) / double(zh.size());
    const auto hb = check_h_bound(zh);
    v.check("|h(z)| < 9z/8 on (0, 20]", hb.ok, "min margin " + fmt(hb.min_margin));
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    static const std::map<std::string, std::function<void(Verifier&)>> suites = {
        {"bessel", suite_bessel},     {"inequalities", suite_inequalities}, {"oracle", suite_oracle},
        {"appendixA", suite_appendix_a}, {"appendixC", suite_appendix_c}};
    std::vector<std::string> run;
    if (cfg.suite == "all") run = {"bessel", "inequalities", "oracle", "appendixA", "appendixC"};
    else if (suites.count(cfg.suite)) run = {cfg.suite};
    else throw UsageError("unknown suite '" + cfg.suite + "'");
    Verifier v(out);
    for (const auto& name : run) {
        out << "[" << name << "]\n";
        suites.at(name)(v);
    }
    out << (v.failures() == 0 ? "all checks passed\n" : std::to_string(v.failures()) + " check(s) failed\n");
    return v.failures() == 0 ? kOk : kFailed;
}

// ---- converge -------------------------------------------------------------

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
    const Setting s = parse_setting(cfg.setting);
    const Method m = parse_method(cfg.method.empty() ? "sbt_truncated" : cfg.method);
    if (m == Method::pde) throw UsageError("converge compares pde against another method");
    const Regularity reg = parse_regularity(cfg.regularity);
    if (m == Method::delta_reg && cfg.delta > 0)
        EigenFamily::delta_reg(s, s == Setting::laplace ? Direction::longitudinal : Direction::tangential, cfg.delta)
            .validate();
    if (cfg.format != "csv" && cfg.format != "json") throw UsageError("format must be csv or json");
    const auto grid = cfg.eps_grid.empty() ? default_eps_grid() : cfg.eps_grid;
    const auto rep = convergence_study(s, m, reg, grid, cfg.seed, cfg.delta, cfg.k_max);
    Sink sink(cfg, "converge", out);
    sink.os() << (cfg.format == "json" ? report_to_json(rep) : report_to_csv(rep));
    return kOk;
}

// ---- delta-opt ------------------------------------------------------------

int cmd_delta_opt(const RunConfig& cfg, std::ostream& out) {
    const Setting s = parse_setting(cfg.setting);
    if (!(cfg.ratio > 0)) throw UsageError("--ratio must be positive");
    const double d = optimal_delta(s, cfg.ratio);
    Sink sink(cfg, "delta-opt", out);
    std::ostream& os = sink.os();
    if (cfg.delta_grid.empty()) {
        os << std::fixed << std::setprecision(10) << d << "\n";
        return kOk;
    }
    const auto g = parse_delta_grid(cfg.delta_grid);
    std::vector<double> grid(std::size_t(g.n));
    for (int i = 0; i < g.n; ++i) grid[std::size_t(i)] = g.lo + (g.hi - g.lo) * double(i) / double(g.n - 1);
    const auto vals = cdelta_profile(s, grid, cfg.c1, cfg.c2);
    os << "# delta_star=" << std::fixed << std::setprecision(10) << d << "\n";
    os << "delta,c_delta\n";
    for (std::size_t i = 0; i < grid.size(); ++i) os << sci(grid[i]) << "," << sci(vals[i]) << "\n";
    return kOk;
}

// ---- dynamics -------------------------------------------------------------

int cmd_dynamics(const RunConfig& cfg, std::ostream& out) {
    Sink sink(cfg, "dynamics", out);
    std::ostream& os = sink.os();
    if (!cfg.sweep.empty()) {
        for (long K : cfg.sweep)
            if (K < 8) throw UsageError("sweep values must be >= 8");
        (void)Mode(1, cfg.eps);
        const auto sw = stability_sweep(cfg.eps, cfg.sweep);
        os << "eps,K_max,ds,dt_max_analytic,dt_max_empirical\n";
        for (const auto& r : sw.rows)
            os << sci(r.eps) << "," << r.k_max << "," << sci(r.ds) << "," << sci(r.dt_analytic) << ","
               << sci(r.dt_empirical) << "\n";
        return kOk;
    }
    const long K = cfg.k_max > 0 ? cfg.k_max : 32;
    if (K < 8) throw UsageError("--k-max must be >= 8");
    Scheme scheme;
    if (cfg.scheme == "implicit" || cfg.scheme == "implicit_exact") scheme = Scheme::implicit_exact;
    else if (cfg.scheme == "explicit" || cfg.scheme == "explicit_euler") scheme = Scheme::explicit_euler;
    else throw UsageError("scheme must be implicit or explicit");
    if (cfg.steps < 1) throw UsageError("--steps must be >= 1");
    DynamicsState st(cfg.eps, K);
    const double dt = cfg.dt > 0 ? cfg.dt : 0.5 * max_stable_dt(cfg.eps, K, false);
    const auto f = make_test_field(FieldProfile::h2_rough, K, cfg.seed, 3);
    for (long k = -K; k <= K; ++k) {
        if (k == 0) continue;
        st.x(k) = f.at(0, k);
        st.y(k) = f.at(1, k);
    }
    os << "step,t,energy\n";
    os << 0 << "," << sci(0.0) << "," << sci(energy(st)) << "\n";
    for (int i = 1; i <= cfg.steps; ++i) {
        st = step(st, dt, scheme);
        os << i << "," << sci(st.t) << "," << sci(energy(st)) << "\n";
    }
    return kOk;
}

// ---- profile --------------------------------------------------------------

int cmd_profile(const RunConfig& cfg, std::ostream& out) {
    const Direction d = cfg.direction.empty() ? Direction::tangential : parse_direction(cfg.direction);
    const Mode m(cfg.k, cfg.eps);
    if (cfg.points < 2) throw UsageError("--points must be >= 2");
    const double r_max = cfg.r_max > 0 ? cfg.r_max : 10.0 * cfg.eps;
    if (!(r_max > cfg.eps)) throw UsageError("--r-max must exceed eps");
    const auto sol = solve_mode(d, m);
    Sink sink(cfg, "profile", out);
    std::ostream& os = sink.os();
    if (d == Direction::longitudinal) os << "r,u\n";
    else os << "r,u_r_re,u_r_im,u_theta_re,u_theta_im,u_z_re,u_z_im,p_re,p_im\n";
    for (int i = 0; i < cfg.points; ++i) {
        const double r = cfg.eps + (r_max - cfg.eps) * double(i) / double(cfg.points - 1);
        const auto pv = evaluate_profile(sol, r);
        os << sci(r);
        if (d == Direction::longitudinal) {
            os << "," << sci(pv.u) << "\n";
            continue;
        }
        for (const cplx& c : {pv.u_r, pv.u_theta, pv.u_z, pv.p}) os << "," << sci(c.real()) << "," << sci(c.imag());
        os << "\n";
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Slender-body spectra, verification suites and convergence studies", "slender"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.set_config("--config", "", "key = value config file mirroring the flags");
    RunConfig cfg;
    app.add_option("-o,--output", cfg.output, "output file (default: stdout or $SLENDER_OUTPUT_DIR)");
    app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto common = [&](CLI::App* sc) {
        sc->add_option("--setting", cfg.setting, "laplace or stokes");
        sc->add_option("--eps", cfg.eps, "fiber radius");
    };

    auto* sp = app.add_subcommand("spectrum", "eigenvalue tables");
    common(sp);
    sp->add_option("--direction", cfg.direction, "longitudinal, tangential or normal");
    sp->add_option("--method", cfg.method, "pde, sbt, sbt_truncated, delta_reg or all (long format)");
    sp->add_option("--delta", cfg.delta, "regularisation parameter (default 2)");
    sp->add_option("--k", cfg.k_range, "wavenumber range a..b");

    auto* vf = app.add_subcommand("verify", "run the invariant suites");
    vf->add_option("suite", cfg.suite, "bessel | inequalities | oracle | appendixA | appendixC | all");

    auto* cv = app.add_subcommand("converge", "convergence-rate study");
    common(cv);
    cv->add_option("--method", cfg.method, "sbt_truncated, delta_reg or sbt");
    cv->add_option("--regularity", cfg.regularity, "H1 or H2");
    cv->add_option("--seed", cfg.seed);
    cv->add_option("--delta", cfg.delta, "delta for delta_reg (default: optimal for the tracked ratio)");
    cv->add_option("--eps-grid", cfg.eps_grid, "strictly decreasing eps values")->delimiter(',');
    cv->add_option("--k-max", cfg.k_max, "override the ceil(64/eps) resolution");

    auto* dopt = app.add_subcommand("delta-opt", "optimal regularisation parameter");
    dopt->add_option("--setting", cfg.setting, "laplace or stokes");
    dopt->add_option("--ratio", cfg.ratio, "C2/C1")->required();
    dopt->add_option("--c1", cfg.c1);
    dopt->add_option("--c2", cfg.c2);
    dopt->add_option("--delta-grid", cfg.delta_grid, "lo..hi:n grid for the C_delta profile");

    auto* dy = app.add_subcommand("dynamics", "linearised filament dynamics");
    dy->add_option("--eps", cfg.eps);
    dy->add_option("--k-max", cfg.k_max);
    dy->add_option("--dt", cfg.dt, "time step (default: half the analytic limit)");
    dy->add_option("--steps", cfg.steps);
    dy->add_option("--scheme", cfg.scheme, "implicit or explicit");
    dy->add_option("--seed", cfg.seed);
    dy->add_option("--sweep", cfg.sweep, "K_max values for a stability sweep")->delimiter(',');

    auto* pr = app.add_subcommand("profile", "radial mode profile");
    pr->add_option("--direction", cfg.direction, "longitudinal, tangential or normal");
    pr->add_option("--eps", cfg.eps);
    pr->add_option("--k", cfg.k);
    pr->add_option("--r-max", cfg.r_max);
    pr->add_option("--points", cfg.points);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*sp) return cmd_spectrum(cfg, out);
        if (*vf) return cmd_verify(cfg, out);
        if (*cv) return cmd_converge(cfg, out);
        if (*dopt) return cmd_delta_opt(cfg, out);
        if (*dy) return cmd_dynamics(cfg, out);
        if (*pr) return cmd_profile(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResolutionError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

} // namespace slender::cli
