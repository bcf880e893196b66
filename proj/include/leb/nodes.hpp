#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "leb/common.hpp"
#include "leb/jacobi.hpp"

/// Zeros of Jacobi polynomials and the quadrature-derived point-set families
/// built from them (Gauss, Radau, and endpoint-augmented variants).
namespace leb::nodes {

/// The supported interpolation point sets.  `n_quadrature` in NodeSet counts
/// the underlying quadrature points; augmented families carry one extra node.
enum class PointSetFamily {
    GaussLegendre,          ///< N zeros of the Legendre polynomial P_N
    GaussPlusLeftEnd,       ///< Gauss nodes plus the endpoint -1
    GaussPlusRightEnd,      ///< Gauss nodes plus the endpoint +1
    RadauRight,             ///< N-1 zeros of P_{N-1}^{(1,0)} plus the endpoint +1
    RadauLeft,              ///< mirror image of RadauRight (contains -1)
    RadauRightPlusLeftEnd,  ///< RadauRight nodes plus the endpoint -1
    RadauLeftPlusRightEnd,  ///< RadauLeft nodes plus the endpoint +1
    Equidistant,            ///< N equally spaced nodes including both endpoints
    Explicit,               ///< caller-supplied nodes
};

[[nodiscard]] inline std::string to_string(PointSetFamily family) {
    switch (family) {
        case PointSetFamily::GaussLegendre: return "gauss";
        case PointSetFamily::GaussPlusLeftEnd: return "gauss-plus-left";
        case PointSetFamily::GaussPlusRightEnd: return "gauss-plus-right";
        case PointSetFamily::RadauRight: return "radau-right";
        case PointSetFamily::RadauLeft: return "radau-left";
        case PointSetFamily::RadauRightPlusLeftEnd: return "radau-right-plus-left";
        case PointSetFamily::RadauLeftPlusRightEnd: return "radau-left-plus-right";
        case PointSetFamily::Equidistant: return "equidistant";
        case PointSetFamily::Explicit: return "explicit";
    }
    throw std::domain_error("to_string: unknown PointSetFamily");
}

/// Parses the CLI-facing family names (Explicit is not constructible by name).
[[nodiscard]] inline PointSetFamily family_from_string(const std::string& name) {
    if (name == "gauss") return PointSetFamily::GaussLegendre;
    if (name == "gauss-plus-left") return PointSetFamily::GaussPlusLeftEnd;
    if (name == "gauss-plus-right") return PointSetFamily::GaussPlusRightEnd;
    if (name == "radau-right") return PointSetFamily::RadauRight;
    if (name == "radau-left") return PointSetFamily::RadauLeft;
    if (name == "radau-right-plus-left") return PointSetFamily::RadauRightPlusLeftEnd;
    if (name == "radau-left-plus-right") return PointSetFamily::RadauLeftPlusRightEnd;
    if (name == "equidistant") return PointSetFamily::Equidistant;
    throw std::domain_error("unknown point-set family '" + name + "'");
}

/// The eight families that can be built from a quadrature count alone.
[[nodiscard]] inline const std::vector<PointSetFamily>& buildable_families() {
    static const std::vector<PointSetFamily> fams = {
        PointSetFamily::GaussLegendre,         PointSetFamily::GaussPlusLeftEnd,
        PointSetFamily::GaussPlusRightEnd,     PointSetFamily::RadauRight,
        PointSetFamily::RadauLeft,             PointSetFamily::RadauRightPlusLeftEnd,
        PointSetFamily::RadauLeftPlusRightEnd, PointSetFamily::Equidistant,
    };
    return fams;
}

/// An ordered interpolation point set on [-1, 1] together with the angle
/// representation theta_i = arccos(tau_i).  Nodes are strictly increasing, so
/// thetas are strictly decreasing; exact endpoint nodes get exact angles.
struct NodeSet {
    PointSetFamily family = PointSetFamily::Explicit;
    int n_quadrature = 0;
    std::vector<double> nodes;
    std::vector<double> thetas;

    [[nodiscard]] std::size_t size() const { return nodes.size(); }

    /// Checks the structural invariants; throws std::logic_error on violation.
    void validate() const {
        if (nodes.size() != thetas.size() || nodes.empty())
            throw std::logic_error("NodeSet: node/theta size mismatch");
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (std::abs(nodes[i]) > 1.0)
                throw std::logic_error("NodeSet: node outside [-1, 1]");
            if (i > 0 && !(nodes[i - 1] < nodes[i]))
                throw std::logic_error("NodeSet: nodes not strictly increasing");
            if (std::abs(std::cos(thetas[i]) - nodes[i]) > 1e-12)
                throw std::logic_error("NodeSet: theta inconsistent with node");
        }
    }
};

namespace detail {

using jacobi::JacobiParams;

inline constexpr double newton_tol = 1e-15;
inline constexpr int newton_max_iter = 50;

/// Locates the single zero of P_n^{(a,b)} inside (lo, hi) by Newton iteration
/// safeguarded with bisection on the sign-change bracket.
[[nodiscard]] inline double newton_in_bracket(const JacobiParams& params, int n, double lo,
                                              double hi, int zero_index) {
    double flo = jacobi::jacobi_eval(params, n, lo);
    if (flo == 0.0) return lo;  // cannot occur for strict interlacing; defensive
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < newton_max_iter; ++iter) {
        const double f = jacobi::jacobi_eval(params, n, x);
        if (f == 0.0) return x;
        if ((f > 0.0) == (flo > 0.0)) {
            lo = x;
        } else {
            hi = x;
        }
        const double fp = jacobi::jacobi_deriv(params, n, x);
        if (fp != 0.0) {
            const double raw = -f / fp;
            // A Newton correction below tolerance means x already sits within
            // tolerance of the zero — even when x + raw would round onto a
            // bracket edge, which must not be mistaken for leaving the bracket.
            if (std::abs(raw) <= newton_tol) return x + raw;
        }
        double step = (fp != 0.0) ? -f / fp : 0.0;
        double next = x + step;
        if (fp == 0.0 || next <= lo || next >= hi) {
            if (hi - lo <= newton_tol) return 0.5 * (lo + hi);  // bracket exhausted
            next = 0.5 * (lo + hi);  // Newton left the bracket; bisect instead
            step = next - x;
        }
        x = next;
        if (std::abs(step) <= newton_tol) return x;
    }
    throw numerical_error("jacobi_zeros: zero " + std::to_string(zero_index) + " of degree " +
                          std::to_string(n) + " (alpha=" + std::to_string(params.alpha) +
                          ", beta=" + std::to_string(params.beta) + ") did not converge");
}

/// Forces exact odd symmetry on the zero list of a symmetric-weight family.
inline void symmetrize(std::vector<double>& z) {
    const std::size_t n = z.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        const double m = 0.5 * (z[i] - z[n - 1 - i]);
        z[i] = m;
        z[n - 1 - i] = -m;
    }
    if (n % 2 == 1) z[n / 2] = 0.0;
}

}  // namespace detail

/// All zeros of P_k^{(alpha,beta)} for every degree k = 1..n_max, computed in
/// one ascending sweep: the zeros of degree k-1 (plus the interval endpoints)
/// bracket exactly one zero of degree k each, which makes the Newton solve per
/// zero bracket-safe.  Entry [k-1] of the result holds the k zeros of degree k
/// in increasing order.  Throws numerical_error if any zero fails to converge.
[[nodiscard]] inline std::vector<std::vector<double>> jacobi_zero_table(
    const jacobi::JacobiParams& params, int n_max) {
    params.validate();
    if (n_max < 1 || n_max > 200)
        throw std::domain_error("jacobi_zero_table: degree must be in [1, 200]");
    std::vector<std::vector<double>> table;
    table.reserve(static_cast<std::size_t>(n_max));
    const bool symmetric = params.alpha == params.beta;
    std::vector<double> prev;
    for (int k = 1; k <= n_max; ++k) {
        std::vector<double> zeros(static_cast<std::size_t>(k));
        if (k == 1) {
            zeros[0] = (params.beta - params.alpha) / (params.alpha + params.beta + 2.0);
        } else {
            for (int i = 0; i < k; ++i) {
                const double lo = (i == 0) ? -1.0 : prev[static_cast<std::size_t>(i) - 1];
                const double hi = (i == k - 1) ? 1.0 : prev[static_cast<std::size_t>(i)];
                zeros[static_cast<std::size_t>(i)] =
                    detail::newton_in_bracket(params, k, lo, hi, i + 1);
            }
        }
        if (symmetric) detail::symmetrize(zeros);
        table.push_back(zeros);
        prev = table.back();
    }
    return table;
}

/// The n zeros of P_n^{(alpha,beta)}, strictly increasing, all inside (-1, 1).
[[nodiscard]] inline std::vector<double> jacobi_zeros(const jacobi::JacobiParams& params, int n) {
    return jacobi_zero_table(params, n).back();
}

namespace detail {

[[nodiscard]] inline double theta_of(double tau) {
    if (tau == 1.0) return 0.0;
    if (tau == -1.0) return pi;
    return std::acos(tau);
}

[[nodiscard]] inline NodeSet make_node_set(PointSetFamily family, int n,
                                           std::vector<double> nodes) {
    NodeSet ns;
    ns.family = family;
    ns.n_quadrature = n;
    ns.thetas.reserve(nodes.size());
    for (double t : nodes) ns.thetas.push_back(theta_of(t));
    ns.nodes = std::move(nodes);
    return ns;
}

/// Radau nodes on (-1, +1]: the N-1 zeros of P_{N-1}^{(1,0)} plus +1.
/// N = 1 degenerates to the single endpoint.
[[nodiscard]] inline std::vector<double> radau_right_nodes(int n) {
    std::vector<double> nodes;
    if (n >= 2) nodes = jacobi_zeros({1.0, 0.0}, n - 1);
    nodes.push_back(1.0);
    return nodes;
}

}  // namespace detail

/// Builds the point set of the given family with `n_quadrature` quadrature
/// points.  Augmented families carry n_quadrature + 1 nodes.  Throws
/// std::domain_error for n_quadrature < 1 (or > 200), or for Explicit, which
/// requires build_explicit_point_set.
[[nodiscard]] inline NodeSet build_point_set(PointSetFamily family, int n_quadrature) {
    using PF = PointSetFamily;
    const int n = n_quadrature;
    if (n < 1 || n > 200)
        throw std::domain_error("build_point_set: n_quadrature must be in [1, 200], got " +
                                std::to_string(n));
    switch (family) {
        case PF::GaussLegendre:
            return detail::make_node_set(family, n, jacobi_zeros({0.0, 0.0}, n));
        case PF::GaussPlusLeftEnd: {
            std::vector<double> nodes = jacobi_zeros({0.0, 0.0}, n);
            nodes.insert(nodes.begin(), -1.0);
            return detail::make_node_set(family, n, std::move(nodes));
        }
        case PF::GaussPlusRightEnd: {
            std::vector<double> nodes = jacobi_zeros({0.0, 0.0}, n);
            nodes.push_back(1.0);
            return detail::make_node_set(family, n, std::move(nodes));
        }
        case PF::RadauRight:
            return detail::make_node_set(family, n, detail::radau_right_nodes(n));
        case PF::RadauLeft: {
            std::vector<double> rr = detail::radau_right_nodes(n);
            std::vector<double> nodes(rr.size());
            for (std::size_t i = 0; i < rr.size(); ++i) nodes[i] = -rr[rr.size() - 1 - i];
            return detail::make_node_set(family, n, std::move(nodes));
        }
        case PF::RadauRightPlusLeftEnd: {
            std::vector<double> nodes = detail::radau_right_nodes(n);
            nodes.insert(nodes.begin(), -1.0);
            return detail::make_node_set(family, n, std::move(nodes));
        }
        case PF::RadauLeftPlusRightEnd: {
            std::vector<double> rr = detail::radau_right_nodes(n);
            std::vector<double> nodes(rr.size());
            for (std::size_t i = 0; i < rr.size(); ++i) nodes[i] = -rr[rr.size() - 1 - i];
            nodes.push_back(1.0);
            return detail::make_node_set(family, n, std::move(nodes));
        }
        case PF::Equidistant: {
            std::vector<double> nodes;
            if (n == 1) {
                nodes.push_back(0.0);
            } else {
                nodes = uniform_grid(static_cast<std::size_t>(n));
            }
            return detail::make_node_set(family, n, std::move(nodes));
        }
        case PF::Explicit:
            throw std::domain_error("build_point_set: Explicit requires an explicit node list");
    }
    throw std::domain_error("build_point_set: unknown family");
}

/// Wraps a caller-supplied strictly increasing node list in [-1, 1].
[[nodiscard]] inline NodeSet build_explicit_point_set(std::vector<double> nodes) {
    if (nodes.empty()) throw std::domain_error("build_explicit_point_set: empty node list");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (std::abs(nodes[i]) > 1.0)
            throw std::domain_error("build_explicit_point_set: node outside [-1, 1]");
        if (i > 0 && !(nodes[i - 1] < nodes[i]))
            throw std::domain_error("build_explicit_point_set: nodes must be strictly increasing");
    }
    const int count = static_cast<int>(nodes.size());
    return detail::make_node_set(PointSetFamily::Explicit, count, std::move(nodes));
}

/// Result of checking the classical angle-location inequalities for the zeros
/// of a Gauss or Radau point set.  `margin` is the smallest slack (in radians)
/// among the inequalities checked for that index; positive means satisfied
/// strictly.
struct AngleCheck {
    int index = 0;
    bool ok = false;
    double margin = 0.0;
};

struct ZeroAngleDiagnostics {
    PointSetFamily family = PointSetFamily::Explicit;
    int n_quadrature = 0;
    std::vector<AngleCheck> checks;
    std::vector<AngleCheck> separation;  ///< adjacent-zero angle gaps (Radau only)
    bool all_ok = true;
    double worst_margin = std::numeric_limits<double>::infinity();
};

/// Verifies the angle bracketing bounds for the zeros in a GaussLegendre or
/// RadauRight node set, plus the 2.5*pi/N separation bound for adjacent Radau
/// zero angles.  Throws std::domain_error for other families.
///
/// GaussLegendre, zeros tau_1 < ... < tau_N, theta_i = arccos(tau_i):
///     (2i-1)/(2N+1) * pi  <=  pi - theta_i  <=  2i/(2N+1) * pi.
/// RadauRight, zeros tau_1 < ... < tau_{N-1} (the +1 node is exempt):
///     (2i-1)/(2N-1) * pi  <  theta_{N-i}  <  2(i+1)/(2N+1) * pi,
///     (2i-1)/(2N+1) * pi  <  pi - theta_i  <  2i/(2N-1) * pi,
///     pi - theta_i > i/N  and  theta_{N-i} > i/N.
[[nodiscard]] inline ZeroAngleDiagnostics zero_angle_diagnostics(const NodeSet& ns) {
    using PF = PointSetFamily;
    if (ns.family != PF::GaussLegendre && ns.family != PF::RadauRight)
        throw std::domain_error("zero_angle_diagnostics: only GaussLegendre and RadauRight");
    ZeroAngleDiagnostics diag;
    diag.family = ns.family;
    diag.n_quadrature = ns.n_quadrature;
    const int n = ns.n_quadrature;
    const auto theta = [&](int i) { return ns.thetas[static_cast<std::size_t>(i) - 1]; };

    const auto record = [&](std::vector<AngleCheck>& dst, int index, double margin) {
        dst.push_back({index, margin > 0.0, margin});
        diag.all_ok = diag.all_ok && margin > 0.0;
        diag.worst_margin = std::min(diag.worst_margin, margin);
    };

    if (ns.family == PF::GaussLegendre) {
        for (int i = 1; i <= n; ++i) {
            const double phi = pi - theta(i);
            const double lo = (2.0 * i - 1.0) / (2.0 * n + 1.0) * pi;
            const double hi = (2.0 * i) / (2.0 * n + 1.0) * pi;
            record(diag.checks, i, std::min(phi - lo, hi - phi));
        }
        return diag;
    }

    // RadauRight: indices 1..N-1 address the zeros of P_{N-1}^{(1,0)}.
    for (int i = 1; i <= n - 1; ++i) {
        const double th_rev = theta(n - i);
        const double phi = pi - theta(i);
        double margin = std::min({
            th_rev - (2.0 * i - 1.0) / (2.0 * n - 1.0) * pi,
            2.0 * (i + 1.0) / (2.0 * n + 1.0) * pi - th_rev,
            phi - (2.0 * i - 1.0) / (2.0 * n + 1.0) * pi,
            (2.0 * i) / (2.0 * n - 1.0) * pi - phi,
            phi - static_cast<double>(i) / n,
            th_rev - static_cast<double>(i) / n,
        });
        record(diag.checks, i, margin);
    }
    for (int i = 1; i <= n - 2; ++i) {
        const double gap = theta(i) - theta(i + 1);
        record(diag.separation, i, 2.5 * pi / n - gap);
    }
    return diag;
}

}  // namespace leb::nodes
