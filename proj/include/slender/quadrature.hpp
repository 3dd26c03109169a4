#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace slender {

// Gauss-Legendre nodes/weights on [-1,1], computed by Newton iteration in T.
template <class T>
struct GaussLegendre {
    std::vector<T> x, w;

    explicit GaussLegendre(int n) : x(n), w(n) {
        const T pi = T(3.14159265358979323846264338327950288L);
        for (int i = 0; i < (n + 1) / 2; ++i) {
            T t = std::cos(pi * (T(i) + T(0.75)) / (T(n) + T(0.5)));
            T dp = 0;
            for (int it = 0; it < 100; ++it) {
                T p0 = 1, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    T p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1);
                T dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) <= std::numeric_limits<T>::epsilon())
                    break;
            }
            x[i] = -t;
            x[n - 1 - i] = t;
            w[i] = w[n - 1 - i] = 2 / ((1 - t * t) * dp * dp);
        }
    }
};

template <class T>
const GaussLegendre<T>& gauss_legendre_20() {
    static const GaussLegendre<T> rule(20);
    return rule;
}

template <class T, std::size_t M>
struct QuadResult {
    std::array<T, M> value{};
    T error = 0;        // sum of |coarse - fine| over accepted panels, relative to |value|
    int panels = 0;
    bool converged = true;
};

namespace detail {

template <class T, std::size_t M, class F>
std::array<T, M> gl_panel(F& f, T a, T b) {
    const auto& rule = gauss_legendre_20<T>();
    const T c = (a + b) / 2, h = (b - a) / 2;
    std::array<T, M> s{};
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const std::array<T, M> v = f(c + h * rule.x[i]);
        for (std::size_t m = 0; m < M; ++m)
            s[m] += rule.w[i] * v[m];
    }
    for (auto& v : s)
        v *= h;
    return s;
}

} // namespace detail

// Adaptive 20-point Gauss-Legendre for a vector of M integrands sharing one
// evaluation. A panel is accepted when splitting it in two changes every
// component by less than rel_tol * |total| * (panel length / total length).
template <class T, std::size_t M, class F>
QuadResult<T, M> integrate_adaptive(F&& f, T a, T b, T rel_tol, int max_depth = 30) {
    QuadResult<T, M> out;
    // coarse pass to fix the absolute scale
    const int n0 = 16;
    std::array<T, M> scale{};
    std::vector<std::pair<T, T>> work;
    for (int i = 0; i < n0; ++i) {
        T lo = a + (b - a) * T(i) / n0, hi = a + (b - a) * T(i + 1) / n0;
        auto p = detail::gl_panel<T, M>(f, lo, hi);
        for (std::size_t m = 0; m < M; ++m)
            scale[m] += std::abs(p[m]);
        work.emplace_back(lo, hi);
    }
    for (auto& s : scale)
        if (s == 0) s = 1;

    struct Item { T lo, hi; int depth; };
    std::vector<Item> stack;
    for (auto it = work.rbegin(); it != work.rend(); ++it)
        stack.push_back({it->first, it->second, 0});

    std::array<T, M> err{};
    while (!stack.empty()) {
        Item cur = stack.back();
        stack.pop_back();
        T mid = (cur.lo + cur.hi) / 2;
        auto whole = detail::gl_panel<T, M>(f, cur.lo, cur.hi);
        auto left = detail::gl_panel<T, M>(f, cur.lo, mid);
        auto right = detail::gl_panel<T, M>(f, mid, cur.hi);
        bool ok = true;
        std::array<T, M> diff{};
        for (std::size_t m = 0; m < M; ++m) {
            diff[m] = std::abs(whole[m] - left[m] - right[m]);
            T allowed = rel_tol * scale[m] * (cur.hi - cur.lo) / (b - a);
            // roundoff floor: the panel sum itself is only good to a few ulps
            T floor = 64 * std::numeric_limits<T>::epsilon() * std::abs(left[m] + right[m]);
            if (allowed < floor) allowed = floor;
            if (diff[m] > allowed) ok = false;
        }
        if (ok || cur.depth >= max_depth) {
            if (!ok) out.converged = false;
            for (std::size_t m = 0; m < M; ++m) {
                out.value[m] += left[m] + right[m];
                err[m] += diff[m];
            }
            ++out.panels;
        } else {
            stack.push_back({mid, cur.hi, cur.depth + 1});
            stack.push_back({cur.lo, mid, cur.depth + 1});
        }
    }
    for (std::size_t m = 0; m < M; ++m) {
        T rel = out.value[m] != 0 ? err[m] / std::abs(out.value[m]) : err[m];
        if (rel > out.error) out.error = rel;
    }
    return out;
}

// Scalar convenience wrapper in double precision.
template <class F>
QuadResult<double, 1> integrate(F&& f, double a, double b, double rel_tol) {
    auto g = [&f](double t) { return std::array<double, 1>{f(t)}; };
    return integrate_adaptive<double, 1>(g, a, b, rel_tol);
}

} // namespace slender
