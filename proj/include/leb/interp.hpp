#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "leb/common.hpp"

/// Barycentric Lagrange interpolation: basis weights, stable point evaluation,
/// and the spectral differentiation matrix.
namespace leb::interp {

/// Evaluation points closer to a node than this are treated as hitting it,
/// which short-circuits the barycentric quotient before it can divide by a
/// vanishing difference.
inline constexpr double node_hit_tol = 1e-15;

/// Interpolation nodes with their barycentric weights w_j (defined up to a
/// common nonzero scale; normalized here to max |w_j| = 1).  The weights
/// alternate in sign along the sorted nodes.
struct BarycentricBasis {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] std::size_t size() const { return nodes.size(); }

    /// Index of the node within node_hit_tol of tau, or -1 if none.
    [[nodiscard]] int hit_index(double tau) const {
        for (std::size_t k = 0; k < nodes.size(); ++k)
            if (std::abs(tau - nodes[k]) < node_hit_tol) return static_cast<int>(k);
        return -1;
    }
};

/// Computes barycentric weights w_j = 1 / prod_{k != j} (tau_j - tau_k) for
/// strictly increasing nodes.  Each factor is doubled (an overall rescaling)
/// to keep the running product well inside double range even for ~200 nodes,
/// and the result is normalized to max |w_j| = 1.  Throws std::domain_error
/// if any gap is at or below 1e-14.
[[nodiscard]] inline BarycentricBasis barycentric_weights(std::vector<double> nodes) {
    const std::size_t n = nodes.size();
    if (n == 0) throw std::domain_error("barycentric_weights: need at least one node");
    for (std::size_t i = 1; i < n; ++i)
        if (!(nodes[i] - nodes[i - 1] > 1e-14))
            throw std::domain_error("barycentric_weights: nodes must be strictly increasing "
                                    "with gaps above 1e-14");
    std::vector<double> w(n, 1.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) w[j] /= 2.0 * (nodes[j] - nodes[k]);
    double wmax = 0.0;
    for (double x : w) wmax = std::max(wmax, std::abs(x));
    for (double& x : w) x /= wmax;
    return {std::move(nodes), std::move(w)};
}

/// L_j(tau), the j-th Lagrange basis polynomial, via the barycentric second
/// form.  Exactly the Kronecker delta when tau hits a node.
[[nodiscard]] inline double basis_eval(const BarycentricBasis& basis, std::size_t j, double tau) {
    if (j >= basis.size()) throw std::domain_error("basis_eval: index out of range");
    if (basis.size() == 1) return 1.0;
    const int hit = basis.hit_index(tau);
    if (hit >= 0) return (static_cast<std::size_t>(hit) == j) ? 1.0 : 0.0;
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const double t = basis.weights[k] / (tau - basis.nodes[k]);
        den += t;
        if (k == j) num = t;
    }
    return num / den;
}

/// Evaluates the interpolant of `values` at tau (barycentric second form).
/// Reproduces polynomials of degree below the node count up to roundoff.
[[nodiscard]] inline double interpolate(const BarycentricBasis& basis,
                                        std::span<const double> values, double tau) {
    if (values.size() != basis.size())
        throw std::domain_error("interpolate: expected " + std::to_string(basis.size()) +
                                " values, got " + std::to_string(values.size()));
    if (basis.size() == 1) return values[0];
    const int hit = basis.hit_index(tau);
    if (hit >= 0) return values[static_cast<std::size_t>(hit)];
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const double t = basis.weights[k] / (tau - basis.nodes[k]);
        num += t * values[k];
        den += t;
    }
    return num / den;
}

/// The differentiation matrix D with D[k][j] = L_j'(tau_k): applying D to
/// samples of a polynomial of degree below the node count yields its
/// derivative at the nodes.  Off-diagonal entries come from the barycentric
/// weights; each diagonal entry is the negated row sum, which enforces the
/// exact-zero row sums that differentiating the constant 1 demands.
[[nodiscard]] inline std::vector<std::vector<double>> differentiation_matrix(
    const BarycentricBasis& basis) {
    const std::size_t n = basis.size();
    if (n < 2) throw std::domain_error("differentiation_matrix: need at least two nodes");
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        double diag = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            d[k][j] = (basis.weights[j] / basis.weights[k]) / (basis.nodes[k] - basis.nodes[j]);
            diag -= d[k][j];
        }
        d[k][k] = diag;
    }
    return d;
}

/// Derivative of the interpolant of `values` at an arbitrary tau.  At a node
/// this reduces to the matching differentiation-matrix row.  Off the nodes it
/// uses a form of the Schneider-Werner identity recentered on the nearest
/// node k (gap g = tau - tau_k):
///     p'(tau) = Q / (w_k u^2) + g R / (w_k u),
///     Q = sum_{j != k} t_j (v_j - v_k),   R = sum_{j != k} t_j (p - v_j) / (tau - tau_j),
///     u = 1 + g / w_k * sum_{j != k} t_j,  t_j = w_j / (tau - tau_j).
/// Unlike direct differentiation of the barycentric quotient, no term here
/// grows like 1/g^2, so the evaluation stays accurate to roundoff even when
/// tau falls within ~1e-8 of a node.
[[nodiscard]] inline double interpolant_derivative(const BarycentricBasis& basis,
                                                   std::span<const double> values, double tau) {
    if (values.size() != basis.size())
        throw std::domain_error("interpolant_derivative: expected " +
                                std::to_string(basis.size()) + " values, got " +
                                std::to_string(values.size()));
    const std::size_t n = basis.size();
    if (n < 2) throw std::domain_error("interpolant_derivative: need at least two nodes");
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (std::abs(tau - basis.nodes[j]) < std::abs(tau - basis.nodes[k])) k = j;
    const double g = tau - basis.nodes[k];
    if (std::abs(g) < node_hit_tol) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const double dkj =
                (basis.weights[j] / basis.weights[k]) / (basis.nodes[k] - basis.nodes[j]);
            sum += dkj * (values[j] - values[k]);
        }
        return sum;
    }
    double s = 0.0, q = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const double t = basis.weights[j] / (tau - basis.nodes[j]);
        s += t;
        q += t * (values[j] - values[k]);
    }
    const double u = 1.0 + g * s / basis.weights[k];
    const double p = values[k] + g * q / (basis.weights[k] * u);
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const double diff = tau - basis.nodes[j];
        r += basis.weights[j] / diff * (p - values[j]) / diff;
    }
    return q / (basis.weights[k] * u * u) + g * r / (basis.weights[k] * u);
}

}  // namespace leb::interp
