#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hyperball/coxeter.hpp"
#include "hyperball/quadrature.hpp"
#include "hyperball/specfun.hpp"

namespace hyperball {

/**
 * @brief Volume of a complete 3-dimensional hyperbolic orthoscheme with
 *        essential angles (a01, a12, a23) - Kellerhals' closed form.
 *
 * With  tan(theta) = sqrt(cos^2 a12 - sin^2 a01 sin^2 a23) / (cos a01 cos a23):
 *
 *   Vol = 1/4 [ L(a01+theta) - L(a01-theta)
 *             + L(pi/2 + a12 - theta) + L(pi/2 - a12 - theta)
 *             + L(a23+theta) - L(a23-theta) + 2 L(pi/2 - theta) ],
 *
 * where L is the Lobachevsky function.  Covers both the classical case and
 * the simply truncated one (outer principal vertex cut by its polar plane).
 * Throws std::domain_error when theta is not real (no such orthoscheme).
 */
[[nodiscard]] inline double orthoscheme_volume_3d(double a01, double a12, double a23) {
    const double disc = std::cos(a12) * std::cos(a12) -
                        std::sin(a01) * std::sin(a01) * std::sin(a23) * std::sin(a23);
    if (disc < 0.0)
        throw std::domain_error("orthoscheme_volume_3d: no orthoscheme with these angles "
                                "(cos^2 a12 < sin^2 a01 sin^2 a23)");
    const double theta = std::atan2(std::sqrt(disc), std::cos(a01) * std::cos(a23));
    const double half_pi = std::numbers::pi / 2.0;
    return 0.25 * (lobachevsky(a01 + theta) - lobachevsky(a01 - theta) +
                   lobachevsky(half_pi + a12 - theta) + lobachevsky(half_pi - a12 - theta) +
                   lobachevsky(a23 + theta) - lobachevsky(a23 - theta) +
                   2.0 * lobachevsky(half_pi - theta));
}

/**
 * @brief Volume of the complete 5-dimensional orthoscheme with linear
 *        diagram [5,3,3,3,3] (the characteristic simplex of the truncated
 *        regular 5-simplex tiling), via the Schlafli differential formula.
 *
 * The 5-volume reduces to a one-dimensional integral of 3-orthoscheme
 * volumes along the deformation path t in [pi/3, 2pi/5]:
 *
 *   Vol5 = 1/4 Integral Vol3(pi/5, pi/3, beta(t)) dt + zeta(3)/3200,
 *   beta(t) = arctan sqrt(2 - cot^2 t).
 *
 * The constant term is the endpoint contribution at t = 2pi/5, where the
 * deformation reaches the spherical limit.  Throws std::runtime_error when
 * the quadrature cannot reach `quad_tol` (message carries the achieved
 * error estimate).
 */
[[nodiscard]] inline double orthoscheme_volume_5d(double quad_tol = 1e-11) {
    const double pi = std::numbers::pi;
    auto integrand = [pi](double t) {
        const double c = 1.0 / std::tan(t);
        const double beta = std::atan(std::sqrt(2.0 - c * c));
        return orthoscheme_volume_3d(pi / 5.0, pi / 3.0, beta);
    };
    const QuadratureResult q = integrate(integrand, pi / 3.0, 2.0 * pi / 5.0, quad_tol);
    if (!q.converged)
        throw std::runtime_error("orthoscheme_volume_5d: quadrature did not converge "
                                 "(error estimate " + std::to_string(q.error) + ")");
    return 0.25 * q.value + zeta3() / 3200.0;
}

/**
 * @brief Volume of a hyperball lens in H^3: the piece of a hyperball of
 *        height h lying over a base-plane polygon of area A, with walls
 *        orthogonal to the base plane (Bolyai):
 *
 *   Vol = (A/4) (sinh 2h + 2h) = A Integral_0^h cosh^2 t dt.
 */
[[nodiscard]] inline double hyperball_lens_volume_3d(double base_area, double height) {
    if (base_area < 0.0 || height < 0.0)
        throw std::invalid_argument("hyperball_lens_volume_3d: negative input");
    return 0.25 * base_area * (std::sinh(2.0 * height) + 2.0 * height);
}

/**
 * @brief Volume of a hyperball lens in H^5 over a base-plane cell of
 *        4-volume V:
 *
 *   Vol = (V/16) (sinh(4h)/2 + 4 sinh(2h) + 6h) = V Integral_0^h cosh^4 t dt.
 */
[[nodiscard]] inline double hyperball_lens_volume_5d(double base_volume, double height) {
    if (base_volume < 0.0 || height < 0.0)
        throw std::invalid_argument("hyperball_lens_volume_5d: negative input");
    return base_volume / 16.0 *
           (0.5 * std::sinh(4.0 * height) + 4.0 * std::sinh(2.0 * height) + 6.0 * height);
}

/**
 * @brief Area of one full truncation face of the truncated regular
 *        tetrahedron tile of {p,3,3}: a regular triangle with all angles
 *        2pi/p, so by angle defect  A = pi (1 - 6/p).  Requires p > 6.
 */
[[nodiscard]] inline double truncation_face_area_3d(double p) {
    if (!(p > 6.0))
        throw std::invalid_argument("truncation_face_area_3d: needs p > 6 (compact truncation)");
    return std::numbers::pi * (1.0 - 6.0 / p);
}

/// Per-orthoscheme share of the 3D truncation face: the characteristic
/// triangle with angles (pi/p, pi/2, pi/3), area pi (1/6 - 1/p); the full
/// face is 6 such copies.
[[nodiscard]] inline double truncation_face_area_3d_share(double p) {
    return truncation_face_area_3d(p) / 6.0;
}

/// Per-orthoscheme share of the 5D truncation facet: the fundamental domain
/// of the [5,3,3,3] reflection group, whose Gauss-Bonnet covolume is exactly
/// pi^2/10800.
[[nodiscard]] inline double truncation_facet_volume_5d_share() {
    static const double value = gauss_bonnet_volume_4d(CoxeterGraph::linear({5, 3, 3, 3}));
    return value;
}

/// Full truncation facet of the 5D tile: a regular 4-simplex with dihedral
/// angle 2pi/5, i.e. 120 copies (the order of its symmetry group) of the
/// [5,3,3,3] cell: pi^2/90.
[[nodiscard]] inline double truncation_facet_volume_5d() {
    return 120.0 * truncation_facet_volume_5d_share();
}

}  // namespace hyperball
