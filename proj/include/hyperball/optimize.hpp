#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperball {

struct ScalarMaximum {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
};

/**
 * @brief Golden-section search for the maximum of f on [a, b].
 *
 * Assumes f is unimodal on the bracket; converges to |x - x*| <= x_tol.
 */
template <typename F>
[[nodiscard]] ScalarMaximum golden_section_max(F&& f, double a, double b, double x_tol = 1e-9,
                                               int max_iter = 200) {
    if (!(b > a)) throw std::invalid_argument("golden_section_max: empty interval");
    constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    int it = 0;
    while (b - a > x_tol && it < max_iter) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++it;
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm), it};
}

/**
 * @brief Maximum of f on [a, b]: a dense scan followed by golden-section
 *        refinement around the best grid cell.
 *
 * The scan guards against non-unimodal shapes (a pure golden-section run
 * could lock onto the wrong slope); the refinement bracket is the grid
 * neighbourhood of the best sample.  Endpoints are included in the scan.
 */
template <typename F>
[[nodiscard]] ScalarMaximum scan_then_golden(F&& f, double a, double b, int scan_points = 1000,
                                             double x_tol = 1e-9) {
    if (scan_points < 3) throw std::invalid_argument("scan_then_golden: needs >= 3 scan points");
    if (!(b > a)) throw std::invalid_argument("scan_then_golden: empty interval");
    int best = 0;
    double fbest = f(a);
    const double step = (b - a) / (scan_points - 1);
    for (int i = 1; i < scan_points; ++i) {
        const double fx = f(a + step * i);
        if (fx > fbest) {
            fbest = fx;
            best = i;
        }
    }
    const double lo = a + step * std::max(0, best - 1);
    const double hi = a + step * std::min(scan_points - 1, best + 1);
    ScalarMaximum refined = golden_section_max(f, lo, hi, x_tol);
    refined.iterations += scan_points;
    if (fbest > refined.value) return {a + step * best, fbest, refined.iterations};
    return refined;
}

/**
 * @brief Check that f rises to a single interior peak and then falls, by
 *        sign-sampling finite differences on an n-point grid over [a, b].
 *
 * Returns true when the sampled differences are positive up to exactly one
 * turning index and negative afterwards (no second direction change).
   */
template <typename F>
[[nodiscard]] bool single_peak(F&& f, double a, double b, int n, int* turn_index = nullptr) {
    if (n < 3) throw std::invalid_argument("single_peak: needs >= 3 points");
    std::vector<double> v(static_cast<std::size_t>(n));
    const double step = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = f(a + step * i);
    int turn = -1;
    for (int i = 0; i + 1 < n; ++i) {
        const double diff = v[static_cast<std::size_t>(i) + 1] - v[static_cast<std::size_t>(i)];
        if (turn < 0) {
            if (diff <= 0.0) {
                if (i == 0) return false;  // starts by falling
                turn = i;
            }
        } else if (diff >= 0.0) {
            return false;  // rises again after the peak
        }
    }
    if (turn < 0) return false;  // never stopped rising
    if (turn_index) *turn_index = turn;
    return true;
}

}  // namespace hyperball
