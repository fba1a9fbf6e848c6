#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperball/coxeter.hpp"
#include "hyperball/lorentz.hpp"
#include "hyperball/optimize.hpp"
#include "hyperball/volume.hpp"

namespace hyperball {

/**
 * One tile of the truncated regular simplex tiling together with everything
 * the density computations need.  The tile is the regular simplex with outer
 * vertices (poles B_i), truncated by the polar plane of each pole; one
 * hyperball sits on each truncation face.
 *
 *   dimension 3: tiling {p,3,3}, p > 6; 4 balls, 24 characteristic
 *                orthoschemes per tile.
 *   dimension 5: tiling {5,3,3,3,3}; 6 balls, 720 orthoschemes per tile.
 */
struct TruncatedSimplexModel {
    int dimension = 3;
    double p = 0.0;                 // Schlafli parameter (fixed 5 in 5D)
    double y = 0.0;                 // Euclidean scale of the vertex coordinates
    double h = 0.0;                 // truncation height = half the distance between adjacent truncation planes
    double w = 0.0;                 // distance from a truncation plane to the opposite face centre
    double face_measure = 0.0;      // full truncation face: area (3D) / 4-volume (5D)
    double orthoscheme_volume = 0.0;
    double cell_volume = 0.0;       // orthoschemes_per_cell * orthoscheme_volume
    int orthoschemes_per_cell = 0;
    int ball_count = 0;
    std::vector<Vec> poles;         // B_i: outer vertices of the regular simplex
    std::vector<Vec> face_centres;  // T_i: centre of the simplex facet opposite B_i
};

namespace detail {

// The poles must form a regular configuration: equal norms, equal pairwise
// products.  Guards the hard-coded coordinate tables.
inline void check_regularity(const std::vector<Vec>& poles) {
    const double diag = bilinear(poles[0], poles[0]);
    const double off = bilinear(poles[0], poles[1]);
    for (std::size_t i = 0; i < poles.size(); ++i)
        for (std::size_t j = i; j < poles.size(); ++j) {
            const double v = bilinear(poles[i], poles[j]);
            const double want = (i == j) ? diag : off;
            if (std::abs(v - want) > 1e-12 * std::max(1.0, std::abs(want)))
                throw std::logic_error("packing: vertex coordinates are not regular");
        }
}

// Midpoint rule for common finishing steps of both builders: truncation
// height (matrix route) cross-checked against the pole distance (coordinate
// route), then w from the face centres.
inline void finish_model(TruncatedSimplexModel& m, const CoxeterGraph& graph) {
    check_regularity(m.poles);

    m.h = truncation_height(graph);
    const double e = dist_ultraparallel_hyperplanes({m.poles[0]}, {m.poles[1]});
    // Both routes lose digits to cancellation as h -> 0 (p beyond ~1e5), so
    // the absolute bound gets a relative fallback there.
    const double mismatch = std::abs(e - 2.0 * m.h);
    if (mismatch > 1e-10 && mismatch > 1e-4 * std::max(e, 2.0 * m.h)) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "packing: truncation height mismatch between matrix and coordinate "
                      "routes: |e - 2h| = %.3e",
                      mismatch);
        throw std::logic_error(buf);
    }

    m.w = dist_point_to_hyperplane(m.face_centres[0], {m.poles[0]});
    m.cell_volume = m.orthoschemes_per_cell * m.orthoscheme_volume;
}

// T_i: intersection of the facet through the other vertices with the axis
// through B_i and the centre; for a regular simplex this is the normalized
// centroid of the remaining vertices.
inline std::vector<Vec> facet_centres(const std::vector<Vec>& poles) {
    std::vector<Vec> ts;
    ts.reserve(poles.size());
    for (std::size_t i = 0; i < poles.size(); ++i) {
        Vec t(poles[0].size(), 0.0);
        for (std::size_t j = 0; j < poles.size(); ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < t.size(); ++k) t[k] += poles[j][k];
        }
        for (double& c : t) c /= static_cast<double>(poles.size() - 1);
        ts.push_back(std::move(t));
    }
    return ts;
}

}  // namespace detail

/**
 * @brief Build the 3-dimensional model for the tiling {p,3,3}.
 *
 * Real p > 6 is accepted (needed for the optimization over p); only integer
 * p >= 7 yields an actual tiling.  The vertex scale comes from requiring all
 * non-right dihedral angles to equal 2pi/p:
 *
 *   y^2 = 3 (3 cos(2pi/p) - 1) / (cos(2pi/p) + 1).
 */
[[nodiscard]] inline TruncatedSimplexModel build_3d(double p) {
    if (!(p > 6.0))
        throw std::invalid_argument("build_3d: needs p > 6 (the simplex vertices must be outer)");
    TruncatedSimplexModel m;
    m.dimension = 3;
    m.p = p;
    const double c = std::cos(2.0 * std::numbers::pi / p);
    m.y = std::sqrt(3.0 * (3.0 * c - 1.0) / (c + 1.0));

    const double y = m.y;
    const double r2 = std::sqrt(2.0);
    const double r23 = std::sqrt(2.0 / 3.0);
    m.poles = {
        {1.0, 2.0 * r2 * y / 3.0, 0.0, -y / 3.0},
        {1.0, -r2 * y / 3.0, r23 * y, -y / 3.0},
        {1.0, -r2 * y / 3.0, -r23 * y, -y / 3.0},
        {1.0, 0.0, 0.0, y},
    };
    m.face_centres = detail::facet_centres(m.poles);

    m.ball_count = 4;
    m.orthoschemes_per_cell = 24;
    m.face_measure = truncation_face_area_3d(p);
    m.orthoscheme_volume =
        orthoscheme_volume_3d(std::numbers::pi / p, std::numbers::pi / 3.0, std::numbers::pi / 3.0);
    detail::finish_model(m, CoxeterGraph::linear({p, 3, 3}));
    return m;
}

/**
 * @brief Build the 5-dimensional model for the tiling {5,3,3,3,3}.
 *
 * The vertex scale satisfies cos(2pi/5) = (y^2 + 3) / (15 - y^2).  The
 * orthoscheme volume comes from the Schlafli-formula quadrature; `quad_tol`
 * is its absolute tolerance.
 */
[[nodiscard]] inline TruncatedSimplexModel build_5d(double quad_tol = 1e-11) {
    TruncatedSimplexModel m;
    m.dimension = 5;
    m.p = 5.0;
    const double c = std::cos(2.0 * std::numbers::pi / 5.0);
    m.y = std::sqrt((15.0 * c - 3.0) / (1.0 + c));

    const double y = m.y;
    const double a = y / std::sqrt(15.0);
    const double b = y / std::sqrt(10.0);
    const double d = y / std::sqrt(6.0);
    const double e = y / std::sqrt(3.0);
    m.poles = {
        {1.0, a, b, d, e, y},
        {1.0, a, b, d, e, -y},
        {1.0, a, b, -std::sqrt(3.0 / 2.0) * y, 0.0, 0.0},
        {1.0, a, -2.0 * std::sqrt(2.0 / 5.0) * y, 0.0, 0.0, 0.0},
        {1.0, a, b, d, -2.0 * e, 0.0},
        {1.0, -std::sqrt(5.0 / 3.0) * y, 0.0, 0.0, 0.0, 0.0},
    };
    m.face_centres = detail::facet_centres(m.poles);

    m.ball_count = 6;
    m.orthoschemes_per_cell = 720;
    m.face_measure = truncation_facet_volume_5d();
    m.orthoscheme_volume = orthoscheme_volume_5d(quad_tol);
    detail::finish_model(m, CoxeterGraph::linear({5, 3, 3, 3, 3}));
    return m;
}

/**
 * @brief Largest admissible height shift x.
 *
 * The distinguished ball grows to h + x, the others shrink to h - x.  The
 * shrinking ones need h - x >= 0; the growing one must not cross the
 * opposite face centre: h + x <= w.  Hence x_max = min(h, w - h).
 */
[[nodiscard]] inline double x_max(const TruncatedSimplexModel& m) noexcept {
    return std::min(m.h, m.w - m.h);
}

/// Ball heights for shift x: ball 0 gets h + x, the rest h - x.
[[nodiscard]] inline std::vector<double> ball_heights(const TruncatedSimplexModel& m, double x) {
    std::vector<double> hs(static_cast<std::size_t>(m.ball_count), m.h - x);
    hs[0] = m.h + x;
    return hs;
}

/**
 * @brief Packing density of the shifted hyperball configuration:
 *
 *   delta(x) = [lens(A, h+x) + (N-1) lens(A, h-x)] / Vol(cell),
 *
 * with A one full truncation-face measure and N the ball count.  At x = 0
 * this is the congruent-packing density.
 */
[[nodiscard]] inline double density(const TruncatedSimplexModel& m, double x) {
    if (!(x >= 0.0) || x > x_max(m) + 1e-12)
        throw std::invalid_argument("density: x outside [0, x_max]");
    const double grown = m.h + x;
    const double shrunk = std::max(0.0, m.h - x);
    double numerator;
    if (m.dimension == 3)
        numerator = hyperball_lens_volume_3d(m.face_measure, grown) +
                    (m.ball_count - 1) * hyperball_lens_volume_3d(m.face_measure, shrunk);
    else
        numerator = hyperball_lens_volume_5d(m.face_measure, grown) +
                    (m.ball_count - 1) * hyperball_lens_volume_5d(m.face_measure, shrunk);
    return numerator / m.cell_volume;
}

//============================================================================
// Constraint verification
//============================================================================

struct ConstraintCheck {
    std::string requirement;  // "1", "2-3" or "4"
    std::string description;
    bool satisfied = false;
    double margin = 0.0;  // >= 0 means satisfied (up to 1e-9 slack)
};

struct ConstraintReport {
    std::vector<ConstraintCheck> checks;
    bool all_satisfied = false;
};

/**
 * @brief Check a height assignment against the packing requirements:
 *
 *   1   every ball height is nonnegative (the hyperball keeps its base plane),
 *   2-3 interiors are pairwise disjoint: dist(plane_i, plane_j) >= h_i + h_j
 *       (equality = tangency is allowed),
 *   4   no ball reaches past the opposite face centre: h_i <= w.
 *
 * Margins are reported as "slack remaining"; a margin >= -1e-9 counts as
 * satisfied to absorb roundoff at tangency.
 */
[[nodiscard]] inline ConstraintReport validate(const TruncatedSimplexModel& m,
                                               const std::vector<double>& heights) {
    if (heights.size() != static_cast<std::size_t>(m.ball_count))
        throw std::invalid_argument("validate: expected " + std::to_string(m.ball_count) + " heights");
    constexpr double slack = 1e-9;
    ConstraintReport report;

    double min_height = heights[0];
    for (double hv : heights) min_height = std::min(min_height, hv);
    report.checks.push_back({"1", "ball heights are nonnegative", min_height >= -slack, min_height});

    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < heights.size(); ++i)
        for (std::size_t j = i + 1; j < heights.size(); ++j) {
            const double e = dist_ultraparallel_hyperplanes({m.poles[i]}, {m.poles[j]});
            min_gap = std::min(min_gap, e - (heights[i] + heights[j]));
        }
    report.checks.push_back({"2-3",
                             "hyperball interiors are pairwise disjoint "
                             "(base-plane distance >= height sum; equality = tangency)",
                             min_gap >= -slack, min_gap});

    double min_room = std::numeric_limits<double>::infinity();
    for (double hv : heights) min_room = std::min(min_room, m.w - hv);
    report.checks.push_back({"4", "no hyperball reaches past the opposite face centre (height <= w)",
                             min_room >= -slack, min_room});

    report.all_satisfied = true;
    for (const auto& c : report.checks) report.all_satisfied = report.all_satisfied && c.satisfied;
    return report;
}

//============================================================================
// Optimization entry points
//============================================================================

/// Maximize density over the admissible shift range [0, x_max]: 1000-point
/// scan (guarding against non-unimodal shapes) plus golden-section polish.
[[nodiscard]] inline ScalarMaximum maximize_over_x(const TruncatedSimplexModel& m,
                                                   double x_tol = 1e-9) {
    return scan_then_golden([&m](double x) { return density(m, x); }, 0.0, x_max(m), 1000, x_tol);
}

/// Congruent-packing density of the 3D model as a function of real p > 6.
[[nodiscard]] inline double congruent_density_3d(double p) { return density(build_3d(p), 0.0); }

struct OptimumOverP {
    double p = 0.0;
    double delta = 0.0;
    int iterations = 0;
    bool single_peak_confirmed = false;  // rises once, falls once over the scan range
};

/**
 * @brief Maximize the congruent density over real p in (6, infinity).
 *
 * Scans [p_lo, p_hi] densely, refines with golden-section search to
 * |dp| <= p_tol, and confirms the rise-then-fall shape on [p_lo, shape_hi]
 * by finite-difference sign sampling.
 */
[[nodiscard]] inline OptimumOverP maximize_over_p(double p_lo = 6.001, double p_hi = 30.0,
                                                  double p_tol = 1e-6, double shape_hi = 200.0,
                                                  int shape_points = 2000) {
    const ScalarMaximum best = scan_then_golden(congruent_density_3d, p_lo, p_hi, 2000, p_tol);
    OptimumOverP out;
    out.p = best.x;
    out.delta = best.value;
    out.iterations = best.iterations;
    out.single_peak_confirmed = single_peak(congruent_density_3d, p_lo, shape_hi, shape_points);
    return out;
}

}  // namespace hyperball
