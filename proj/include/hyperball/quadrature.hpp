#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

namespace hyperball {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;      // accumulated |K15 - G7| over accepted segments
    int evaluations = 0;
    bool converged = true;   // false when the depth limit was hit somewhere
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss (positive abscissae; the
// odd-indexed ones are the embedded Gauss nodes).
inline constexpr std::array<double, 8> kKronrodX = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> kGaussW = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <typename F>
inline std::pair<double, double> gauss_kronrod_15(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    const double fc = f(mid);
    double resk = kKronrodW[7] * fc;
    double resg = kGaussW[3] * fc;
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = hw * kKronrodX[j];
        const double sum = f(mid - dx) + f(mid + dx);
        resk += kKronrodW[j] * sum;
        if (j % 2 == 1) resg += kGaussW[j / 2] * sum;
    }
    return {resk * hw, std::abs(resk - resg) * hw};
}

template <typename F>
inline void adapt(F& f, double a, double b, double tol, int depth, QuadratureResult& out) {
    const auto [value, err] = gauss_kronrod_15(f, a, b);
    out.evaluations += 15;
    if (err <= tol || depth <= 0) {
        out.value += value;
        out.error += err;
        if (depth <= 0 && err > tol) out.converged = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol, depth - 1, out);
    adapt(f, mid, b, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/**
 * @brief Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
 *
 * Bisects any segment whose Kronrod-vs-Gauss discrepancy exceeds its share
 * of the absolute tolerance.  |K - G| grossly overestimates the actual K15
 * error for smooth integrands, so the achieved accuracy is usually far
 * better than `abs_tol`.
 */
template <typename F>
[[nodiscard]] QuadratureResult integrate(F&& f, double a, double b, double abs_tol = 1e-11,
                                         int max_depth = 40) {
    QuadratureResult out;
    if (a == b) return out;
    detail::adapt(f, a, b, abs_tol, max_depth, out);
    return out;
}

}  // namespace hyperball
