#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperball/lorentz.hpp"

namespace hyperball {

//============================================================================
// Coxeter graphs
//============================================================================

// Undirected graph on `rank` nodes with edge labels m_ij.  Label 2 means "no
// edge" (commuting generators); labels may be real (>= 2) or infinite.  Only
// the group-theoretic operations require integer labels.
class CoxeterGraph {
  public:
    explicit CoxeterGraph(int rank) : rank_(rank), labels_(static_cast<std::size_t>(rank) * rank, 2.0) {
        if (rank < 1 || rank > 6) throw std::invalid_argument("CoxeterGraph: rank must be in [1, 6]");
    }

    /// Path graph with consecutive labels, e.g. linear({7, 3, 3}) has rank 4.
    [[nodiscard]] static CoxeterGraph linear(const std::vector<double>& labels) {
        CoxeterGraph g(static_cast<int>(labels.size()) + 1);
        for (std::size_t i = 0; i < labels.size(); ++i)
            g.set_label(static_cast<int>(i), static_cast<int>(i) + 1, labels[i]);
        return g;
    }

    [[nodiscard]] int rank() const noexcept { return rank_; }

    [[nodiscard]] double label(int i, int j) const {
        check_pair(i, j);
        return labels_[static_cast<std::size_t>(i) * rank_ + j];
    }

    void set_label(int i, int j, double m) {
        check_pair(i, j);
        if (!(m >= 2.0))  // also rejects NaN
            throw std::invalid_argument("CoxeterGraph: edge label must be >= 2");
        labels_[static_cast<std::size_t>(i) * rank_ + j] = m;
        labels_[static_cast<std::size_t>(j) * rank_ + i] = m;
    }

    /// Subgraph induced by the node subset encoded in `mask` (bit i = node i).
    [[nodiscard]] CoxeterGraph induced(unsigned mask) const {
        std::vector<int> nodes;
        for (int i = 0; i < rank_; ++i)
            if (mask & (1u << i)) nodes.push_back(i);
        if (nodes.empty()) throw std::invalid_argument("CoxeterGraph::induced: empty subset");
        CoxeterGraph g(static_cast<int>(nodes.size()));
        for (std::size_t a = 0; a < nodes.size(); ++a)
            for (std::size_t b = a + 1; b < nodes.size(); ++b)
                g.set_label(static_cast<int>(a), static_cast<int>(b), label(nodes[a], nodes[b]));
        return g;
    }

  private:
    void check_pair(int i, int j) const {
        if (i < 0 || j < 0 || i >= rank_ || j >= rank_ || i == j)
            throw std::invalid_argument("CoxeterGraph: bad node pair");
    }

    int rank_;
    std::vector<double> labels_;
};

/// Parse a linear Schlafli symbol "p,q,r[,s,t]"; the first entry may be
/// non-integer (geometric continuation), the remaining ones must parse as
/// numbers >= 2 as well.
[[nodiscard]] inline CoxeterGraph parse_schlafli(const std::string& text) {
    std::vector<double> labels;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_schlafli: bad entry '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("parse_schlafli: bad entry '" + item + "'");
        labels.push_back(v);
    }
    if (labels.empty()) throw std::invalid_argument("parse_schlafli: empty symbol");
    return CoxeterGraph::linear(labels);
}

/// Coxeter-Schlafli matrix: c_ii = 1, c_ij = -cos(pi / m_ij).
[[nodiscard]] inline SmallMatrix gram_matrix(const CoxeterGraph& g) {
    const int n = g.rank();
    SmallMatrix c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        c(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double m = g.label(i, j);
            // Orthogonal mirrors (m = 2) must come out exactly 0, not -cos(pi/2).
            const double entry =
                std::isinf(m) ? -1.0 : (m == 2.0 ? 0.0 : -std::cos(std::numbers::pi / m));
            c(i, j) = entry;
            c(j, i) = entry;
        }
    }
    return c;
}

/**
 * @brief Truncation height of the orthoscheme described by a linear graph.
 *
 * With (h_ij) the inverse of the Coxeter-Schlafli matrix and a, b the last
 * two indices,
 *
 *   cosh h = sqrt((h_aa h_bb - h_ab^2) / (h_aa h_bb)).
 *
 * h is the distance from the polar plane of the outer principal vertex to
 * the vertex's foot, i.e. half the distance between two adjacent truncating
 * planes of the tiling's cell.  Throws std::domain_error when the argument
 * of arccosh falls below 1 (the vertex is not outer, nothing is truncated).
 */
[[nodiscard]] inline double truncation_height(const CoxeterGraph& g) {
    if (g.rank() < 3) throw std::invalid_argument("truncation_height: rank must be >= 3");
    const SmallMatrix h = invert_small(gram_matrix(g));
    const std::size_t a = h.size() - 2, b = h.size() - 1;
    const double haa = h(a, a), hbb = h(b, b), hab = h(a, b);
    const double arg = (haa * hbb - hab * hab) / (haa * hbb);
    if (!(arg >= 1.0))
        throw std::domain_error("truncation_height: vertex is not outer (arccosh argument " +
                                std::to_string(arg) + " < 1)");
    return std::acosh(std::sqrt(arg));
}

//============================================================================
// Finite reflection group orders
//============================================================================

namespace detail {

[[nodiscard]] inline bool is_integer_label(double m) noexcept {
    return std::isfinite(m) && m == std::floor(m);
}

[[nodiscard]] inline std::uint64_t factorial_u64(int n) noexcept {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Order of the irreducible finite Coxeter group whose diagram is the given
// connected component (nodes listed in `nodes`), or nullopt when infinite.
[[nodiscard]] inline std::optional<std::uint64_t> component_order(const CoxeterGraph& g,
                                                                  const std::vector<int>& nodes) {
    const int n = static_cast<int>(nodes.size());
    if (n == 1) return 2;

    // collect edges and degrees inside the component
    std::vector<int> degree(nodes.size(), 0);
    int edge_count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double m = g.label(nodes[a], nodes[b]);
            if (m == 2.0) continue;
            if (std::isinf(m)) return std::nullopt;
            ++edge_count;
            ++degree[a];
            ++degree[b];
        }
    if (edge_count != n - 1) return std::nullopt;  // a cycle: affine or worse

    int branch = -1;
    for (int a = 0; a < n; ++a) {
        if (degree[a] >= 4) return std::nullopt;
        if (degree[a] == 3) {
            if (branch >= 0) return std::nullopt;  // two branch nodes
            branch = a;
        }
    }

    if (branch < 0) {
        // path: read off the label sequence from one endpoint
        int start = 0;
        while (degree[start] != 1) ++start;
        std::vector<double> seq;
        int prev = -1, cur = start;
        for (int step = 0; step < n - 1; ++step) {
            for (int b = 0; b < n; ++b) {
                if (b == prev || b == cur) continue;
                const double m = g.label(nodes[cur], nodes[b]);
                if (m != 2.0) {
                    seq.push_back(m);
                    prev = cur;
                    cur = b;
                    break;
                }
            }
        }
        if (n == 2) return static_cast<std::uint64_t>(2.0 * seq[0]);
        const int fours = static_cast<int>(std::count(seq.begin(), seq.end(), 4.0));
        const int fives = static_cast<int>(std::count(seq.begin(), seq.end(), 5.0));
        const int threes = static_cast<int>(std::count(seq.begin(), seq.end(), 3.0));
        if (threes + fours + fives != n - 1) return std::nullopt;  // label >= 6 on a path of rank >= 3
        if (fours == 0 && fives == 0) return factorial_u64(n + 1);  // A_n
        if (fours == 1 && fives == 0) {
            if (seq.front() == 4.0 || seq.back() == 4.0)  // B_n
                return (std::uint64_t{1} << n) * factorial_u64(n);
            if (n == 4 && seq[1] == 4.0) return 1152;  // F4
            return std::nullopt;
        }
        if (fives == 1 && fours == 0 && (seq.front() == 5.0 || seq.back() == 5.0)) {
            if (n == 3) return 120;    // H3
            if (n == 4) return 14400;  // H4
        }
        return std::nullopt;
    }

    // tree with one degree-3 node: D_n / E_6 / E_7 / E_8, all labels must be 3
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double m = g.label(nodes[a], nodes[b]);
            if (m != 2.0 && m != 3.0) return std::nullopt;
        }
    // arm lengths measured in edges from the branch node
    std::vector<int> arms;
    for (int b = 0; b < n; ++b) {
        if (b == branch || g.label(nodes[branch], nodes[b]) == 2.0) continue;
        int len = 1, prev = branch, cur = b;
        for (;;) {
            int next = -1;
            for (int c = 0; c < n; ++c) {
                if (c == prev || c == cur) continue;
                if (g.label(nodes[cur], nodes[c]) != 2.0) {
                    next = c;
                    break;
                }
            }
            if (next < 0) break;
            ++len;
            prev = cur;
            cur = next;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) return std::nullopt;
    if (arms[0] == 1 && arms[1] == 1)  // D_n
        return (std::uint64_t{1} << (n - 1)) * factorial_u64(n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return 51840;      // E6
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return 2903040;    // E7
    if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return 696729600;  // E8
    return std::nullopt;
}

}  // namespace detail

/**
 * @brief Order of the Coxeter group defined by the graph, or nullopt when the
 *        group is infinite.
 *
 * Classifies every connected component against the finite-type catalogue
 * (A, B, D, E6-E8, F4, H3, H4, I2(m)) and multiplies the component orders.
 * Requires integer labels; real labels have no group interpretation.
 */
[[nodiscard]] inline std::optional<std::uint64_t> finite_order(const CoxeterGraph& g) {
    const int n = g.rank();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double m = g.label(i, j);
            if (!std::isinf(m) && !detail::is_integer_label(m))
                throw std::invalid_argument("finite_order: non-integer edge label " + std::to_string(m));
        }

    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::uint64_t order = 1;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> nodes{i};
        comp[i] = i;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (int j = 0; j < n; ++j)
                if (comp[j] < 0 && g.label(nodes[k], j) != 2.0) {
                    comp[j] = i;
                    nodes.push_back(j);
                }
        const auto c = detail::component_order(g, nodes);
        if (!c) return std::nullopt;
        order *= *c;
    }
    return order;
}

//============================================================================
// Orbifold Euler characteristic and Gauss-Bonnet volume
//============================================================================

// Exact fraction with 64-bit numerator/denominator; sufficient for sums of
// reciprocal group orders (all denominators divide lcm's far below 2^63).
struct Rational {
    long long num = 0;
    long long den = 1;

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    [[nodiscard]] Rational operator+(const Rational& o) const {
        Rational r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }

    [[nodiscard]] bool operator==(const Rational& o) const noexcept {
        return num == o.num && den == o.den;
    }

    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

/**
 * @brief Orbifold Euler characteristic of a Coxeter group:
 *
 *   chi = sum over all subsets T of the generator set of (-1)^|T| / |W_T|,
 *
 * computed in exact rational arithmetic.  The full-set term contributes 0
 * when the whole group is infinite (1/infinity); every *proper* parabolic
 * subgroup must be finite or std::domain_error is thrown.
 */
[[nodiscard]] inline Rational orbifold_euler_characteristic(const CoxeterGraph& g) {
    const int n = g.rank();
    const unsigned full = (1u << n) - 1u;
    Rational chi{1, 1};  // empty subset: trivial group
    for (unsigned mask = 1; mask <= full; ++mask) {
        const auto order = finite_order(g.induced(mask));
        const int bits = std::popcount(mask);
        if (!order) {
            if (mask != full)
                throw std::domain_error(
                    "orbifold_euler_characteristic: infinite proper parabolic subgroup");
            continue;  // 1/|W| -> 0
        }
        const long long sign = (bits % 2 == 0) ? 1 : -1;
        chi = chi + Rational{sign, static_cast<long long>(*order)};
    }
    return chi;
}

/**
 * @brief Hyperbolic covolume of a compact 4-dimensional Coxeter simplex group
 *        via Gauss-Bonnet:  Vol = (4 pi^2 / 3) |chi|.
 *
 * Requires rank 5 (a 4-simplex has 5 facets) and an infinite (hyperbolic)
 * group whose proper parabolic subgroups are all finite.
 */
[[nodiscard]] inline double gauss_bonnet_volume_4d(const CoxeterGraph& g) {
    if (g.rank() != 5)
        throw std::invalid_argument("gauss_bonnet_volume_4d: rank must be 5 (4-simplex)");
    if (finite_order(g))
        throw std::domain_error("gauss_bonnet_volume_4d: group is finite, not hyperbolic");
    const Rational chi = orbifold_euler_characteristic(g);
    const double pi = std::numbers::pi;
    return (4.0 * pi * pi / 3.0) * std::abs(chi.to_double());
}

}  // namespace hyperball
