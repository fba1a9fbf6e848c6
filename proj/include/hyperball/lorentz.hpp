#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperball {

// Homogeneous coordinates (x^0, x^1, ..., x^n) of a point in the projective
// model of n-dimensional hyperbolic space.  The quadratic form has signature
// (1, n):  <x, y> = -x^0 y^0 + x^1 y^1 + ... + x^n y^n.  Points with <x,x> < 0
// are proper points, <x,x> = 0 lies on the absolute, <x,x> > 0 is outside.
using Vec = std::vector<double>;

// A hyperplane represented by its pole: the plane is the polar of `pole`
// with respect to the absolute quadric.  Ultraparallel (truncating) planes
// have poles with <b,b> > 0.
struct Hyperplane {
    Vec pole;
};

enum class PointClass { Interior, Boundary, Outer };

// Raised by dist_ultraparallel_hyperplanes when the planes meet inside the
// space (or are boundary-parallel); carries the cosine of their angle.
class not_ultraparallel_error : public std::domain_error {
  public:
    explicit not_ultraparallel_error(double cos_angle)
        : std::domain_error("hyperplanes are not ultraparallel (|cos angle| = " +
                            std::to_string(std::abs(cos_angle)) + " <= 1)"),
          cos_angle_(cos_angle) {}
    [[nodiscard]] double cos_angle() const noexcept { return cos_angle_; }

  private:
    double cos_angle_;
};

namespace detail {

inline void require_same_dim(const Vec& x, const Vec& y, const char* what) {
    if (x.size() != y.size())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
}

inline void require_valid(const Vec& x, const char* what) {
    if (x.size() < 2)
        throw std::invalid_argument(std::string(what) + ": vector needs at least 2 coordinates");
}

inline double euclidean_norm_sq(const Vec& x) noexcept {
    double s = 0.0;
    for (double c : x) s += c * c;
    return s;
}

}  // namespace detail

/// Bilinear form of signature (1, n):  -x^0 y^0 + sum_i x^i y^i.
[[nodiscard]] inline double bilinear(const Vec& x, const Vec& y) {
    detail::require_valid(x, "bilinear");
    detail::require_same_dim(x, y, "bilinear");
    double s = -x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

/**
 * @brief Classify a point against the absolute quadric.
 *
 * Scale-invariant: |<x,x>| <= tol * ||x||^2 (Euclidean norm) counts as
 * Boundary, so the verdict does not change under rescaling of the
 * homogeneous coordinates.
 */
[[nodiscard]] inline PointClass classify(const Vec& x, double boundary_tol = 1e-10) {
    detail::require_valid(x, "classify");
    const double norm_sq = detail::euclidean_norm_sq(x);
    if (norm_sq == 0.0) throw std::invalid_argument("classify: zero vector");
    const double q = bilinear(x, x);
    if (std::abs(q) <= boundary_tol * norm_sq) return PointClass::Boundary;
    return q < 0.0 ? PointClass::Interior : PointClass::Outer;
}

/**
 * @brief Distance from an interior point t to the hyperplane polar to b.
 *
 *   sinh d = |<b, t>| / sqrt(-<b,b> <t,t>),   <t,t> < 0,  <b,b> > 0.
 */
[[nodiscard]] inline double dist_point_to_hyperplane(const Vec& t, const Hyperplane& plane) {
    const Vec& b = plane.pole;
    const double bb = bilinear(b, b);
    const double tt = bilinear(t, t);
    if (classify(t) != PointClass::Interior)
        throw std::invalid_argument("dist_point_to_hyperplane: point is not interior");
    if (classify(b) != PointClass::Outer)
        throw std::invalid_argument("dist_point_to_hyperplane: pole is not outer");
    const double bt = bilinear(b, t);
    return std::asinh(std::abs(bt) / std::sqrt(-bb * tt));
}

/**
 * @brief Distance between two ultraparallel hyperplanes given by their poles.
 *
 *   cosh d = |<a, b>| / sqrt(<a,a> <b,b>).
 *
 * Throws not_ultraparallel_error (carrying cos of the angle) when the ratio
 * is <= 1, i.e. the planes intersect or are parallel.
 */
[[nodiscard]] inline double dist_ultraparallel_hyperplanes(const Hyperplane& pa, const Hyperplane& pb) {
    const Vec& a = pa.pole;
    const Vec& b = pb.pole;
    if (classify(a) != PointClass::Outer || classify(b) != PointClass::Outer)
        throw std::invalid_argument("dist_ultraparallel_hyperplanes: poles must be outer points");
    const double ratio =
        std::abs(bilinear(a, b)) / std::sqrt(bilinear(a, a) * bilinear(b, b));
    if (ratio <= 1.0) throw not_ultraparallel_error(ratio);
    return std::acosh(ratio);
}

/**
 * @brief Orthogonal projection of a point onto the polar plane of `pole`.
 *
 * The foot of the perpendicular from p to the polar of b is
 *   q = p <b,b> - b <p,b>,
 * the component of p conjugate to b; by construction <q, b> = 0.
 */
[[nodiscard]] inline Vec foot_on_polar(const Vec& p, const Vec& pole) {
    detail::require_same_dim(p, pole, "foot_on_polar");
    const double bb = bilinear(pole, pole);
    if (bb <= 0.0) throw std::invalid_argument("foot_on_polar: pole is not an outer point");
    const double pb = bilinear(p, pole);
    Vec q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] * bb - pole[i] * pb;
    return q;
}

//============================================================================
// Small dense matrices (dimension <= 6) for the Gram-matrix computations.
//============================================================================

class SmallMatrix {
  public:
    static constexpr std::size_t kMaxDim = 6;

    explicit SmallMatrix(std::size_t n) : n_(n), a_{} {
        if (n < 1 || n > kMaxDim)
            throw std::invalid_argument("SmallMatrix: dimension must be in [1, 6]");
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * kMaxDim + j]; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * kMaxDim + j]; }

    [[nodiscard]] static SmallMatrix identity(std::size_t n) {
        SmallMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    [[nodiscard]] double max_abs() const noexcept {
        double mx = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) mx = std::max(mx, std::abs((*this)(i, j)));
        return mx;
    }

  private:
    std::size_t n_;
    std::array<double, kMaxDim * kMaxDim> a_;
};

/**
 * @brief Invert a matrix of dimension <= 6 by Gauss-Jordan elimination with
 *        partial pivoting.
 *
 * Throws std::domain_error when a pivot falls below 1e-13 times the largest
 * entry of the input (singular within working precision).  For the
 * well-conditioned matrices handled here the residual ||A A^-1 - I||_max
 * stays below 1e-12.
 */
[[nodiscard]] inline SmallMatrix invert_small(SmallMatrix m) {
    const std::size_t n = m.size();
    SmallMatrix inv = SmallMatrix::identity(n);
    const double scale = m.max_abs();
    if (scale == 0.0) throw std::domain_error("invert_small: zero matrix");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
        if (std::abs(m(pivot, col)) <= 1e-13 * scale)
            throw std::domain_error("invert_small: matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const double d = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = m(r, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace hyperball
