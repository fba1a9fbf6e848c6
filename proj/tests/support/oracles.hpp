#pragma once

// Independent reference implementations used only by the test suite.  They
// deliberately avoid the library's own algorithms: plain adaptive Simpson
// instead of Gauss-Kronrod, direct integral definitions instead of closed
// forms, and brute-force group enumeration instead of classification.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <hyperball/coxeter.hpp>

namespace oracle {

namespace detail {

template <typename F>
double simpson_rec(F& f, double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature with Richardson correction.  `tol` must stay
/// a couple of orders above eps * |integral| or the refinement cannot
/// terminate against round-off noise in the error estimate.
template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-13, int depth = 32) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

/**
 * Lobachevsky function straight from its defining integral
 * -int_0^x log|2 sin t| dt for 0 <= x < pi.  The substitution t = x s^2
 * removes the logarithmic endpoint singularity; the integrand extends
 * continuously by 0 at s = 0.
 */
inline double lobachevsky(double x) {
    if (!(x >= 0.0 && x < 3.14159265)) throw std::invalid_argument("oracle domain is [0, pi)");
    if (x == 0.0) return 0.0;
    auto g = [x](double s) {
        if (s == 0.0) return 0.0;
        return -std::log(2.0 * std::sin(x * s * s)) * 2.0 * x * s;
    };
    return integrate(g, 0.0, 1.0, 1e-14, 40);
}

/// Hyperball lens volume from its slab integral: base * int_0^h cosh^k t dt.
inline double lens_volume(double base, double h, int cosh_power) {
    return base * integrate([cosh_power](double t) { return std::pow(std::cosh(t), cosh_power); },
                            0.0, h, 1e-13);
}

/**
 * Order of the Coxeter group by breadth-first enumeration of its standard
 * geometric representation (reflections s_i(v) = v - 2 B(e_i, v) e_i on the
 * root basis).  Returns nullopt once `cap` distinct elements are exceeded,
 * which signals an infinite (affine or hyperbolic) group for sane caps.
 */
inline std::optional<std::uint64_t> brute_force_order(const hyperball::CoxeterGraph& g,
                                                      std::size_t cap = 20000) {
    const std::size_t n = static_cast<std::size_t>(g.rank());
    const hyperball::SmallMatrix B = hyperball::gram_matrix(g);

    using Mat = std::vector<double>;  // n*n row-major
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Mat s(n * n, 0.0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                s[r * n + c] = (r == c ? 1.0 : 0.0) - 2.0 * B(i, c) * (r == i ? 1.0 : 0.0);
        gens.push_back(std::move(s));
    }

    auto mul = [n](const Mat& a, const Mat& b) {
        Mat out(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const double aik = a[i * n + k];
                if (aik == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
            }
        return out;
    };
    auto key_of = [n](const Mat& m) {
        std::string key;
        key.reserve(n * n * 12);
        for (double v : m) {
            key += std::to_string(static_cast<long long>(std::llround(v * 1e6)));
            key += ',';
        }
        return key;
    };

    Mat id(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1.0;

    std::map<std::string, bool> seen;
    std::vector<Mat> frontier{id};
    seen[key_of(id)] = true;
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const Mat& m : frontier)
            for (const Mat& s : gens) {
                Mat prod = mul(m, s);
                std::string key = key_of(prod);
                if (seen.emplace(std::move(key), true).second) {
                    if (seen.size() > cap) return std::nullopt;
                    next.push_back(std::move(prod));
                }
            }
        frontier = std::move(next);
    }
    return static_cast<std::uint64_t>(seen.size());
}

}  // namespace oracle
