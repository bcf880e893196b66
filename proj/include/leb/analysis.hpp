#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leb/common.hpp"
#include "leb/interp.hpp"
#include "leb/lebesgue.hpp"
#include "leb/nodes.hpp"

/// Quantitative studies built on the node/interpolation layers: Lebesgue
/// constant sweeps with affine growth-model fits, the Jackson best-
/// approximation bound, the derivative-error bound for collocation
/// interpolants, and collocation residual experiments for initial-value
/// problems with known solutions.
namespace leb::analysis {

/// One row of a Lebesgue-constant sweep.
struct SweepRow {
    int n = 0;           ///< quadrature count
    int num_points = 0;  ///< interpolation node count (n or n+1)
    double lambda = 1.0;
    double argmax_tau = 0.0;
};

struct SweepTable {
    nodes::PointSetFamily family = nodes::PointSetFamily::Explicit;
    std::vector<SweepRow> rows;
};

/// Growth models fitted to Lebesgue-constant sweeps.
enum class FitModel {
    SqrtAffine,  ///< lambda ~ a * sqrt(N) + b
    LogAffine,   ///< lambda ~ a * ln(N) + b
};

[[nodiscard]] inline std::string to_string(FitModel model) {
    return model == FitModel::SqrtAffine ? "sqrt" : "log";
}

/// Least-squares fit lambda_N ~ a * g(N) + b with its residual statistics.
struct FitResult {
    FitModel model = FitModel::SqrtAffine;
    double a = 0.0;
    double b = 0.0;
    double rms_residual = 0.0;
    double max_rel_deviation = 0.0;
    int n_lo = 0;
    int n_hi = 0;
};

/// A scalar initial-value problem dx/dtau = f(x), x(-1) = x0 on [-1, 1],
/// carrying its closed-form solution and solution derivative so residuals can
/// be measured against the truth.
struct CollocationProblem {
    std::string name;
    std::function<double(double)> dynamics;          ///< f, as a function of x
    double initial_value = 0.0;                      ///< x0 = x(-1)
    std::function<double(double)> exact_solution;    ///< x(tau)
    std::function<double(double)> exact_derivative;  ///< dx/dtau

    /// Verifies self-consistency: the solution meets the initial condition and
    /// satisfies the dynamics on a 101-point grid.  Throws std::logic_error.
    void validate() const {
        if (std::abs(exact_solution(-1.0) - initial_value) > 1e-12)
            throw std::logic_error("CollocationProblem '" + name +
                                   "': exact_solution(-1) != initial_value");
        for (double t : uniform_grid(101))
            if (std::abs(exact_derivative(t) - dynamics(exact_solution(t))) > 1e-10)
                throw std::logic_error("CollocationProblem '" + name +
                                       "': derivative does not satisfy the dynamics");
    }
};

/// Collocation residuals of the interpolant of the exact solution: r0 is the
/// boundary mismatch at -1 and r holds the dynamics mismatch at each
/// collocation point.
struct ResidualReport {
    nodes::PointSetFamily family = nodes::PointSetFamily::Explicit;
    int n = 0;
    double r0 = 0.0;
    std::vector<double> r;
    double sup_norm = 0.0;
};

/// Sweeps the Lebesgue constant of `family` over quadrature counts
/// [n_lo, n_hi].  Any numeric failure is rethrown with the offending N named.
[[nodiscard]] inline SweepTable sweep_constants(nodes::PointSetFamily family, int n_lo,
                                                int n_hi) {
    if (n_lo < 1 || n_hi < n_lo || n_hi > 200)
        throw std::domain_error("sweep_constants: need 1 <= n_lo <= n_hi <= 200");
    SweepTable table;
    table.family = family;
    table.rows.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n) {
        try {
            const nodes::NodeSet ns = nodes::build_point_set(family, n);
            const auto basis = interp::barycentric_weights(ns.nodes);
            const auto report = lebesgue::lebesgue_constant(basis);
            table.rows.push_back(
                {n, static_cast<int>(ns.size()), report.constant, report.argmax_tau});
        } catch (const numerical_error& err) {
            throw numerical_error("sweep_constants at N=" + std::to_string(n) + ": " +
                                  err.what());
        }
    }
    return table;
}

/// Least-squares fit of a sweep to a * g(N) + b with g = sqrt or ln.  Needs at
/// least three rows with non-identical N (otherwise the normal equations are
/// singular and a std::domain_error is thrown).
[[nodiscard]] inline FitResult fit_model(const SweepTable& table, FitModel model) {
    const auto& rows = table.rows;
    if (rows.size() < 3) throw std::domain_error("fit_model: need at least 3 rows");
    const auto g = [model](double n) {
        return model == FitModel::SqrtAffine ? std::sqrt(n) : std::log(n);
    };
    double sgg = 0.0, sg = 0.0, sgy = 0.0, sy = 0.0;
    for (const SweepRow& row : rows) {
        const double gn = g(row.n);
        sgg += gn * gn;
        sg += gn;
        sgy += gn * row.lambda;
        sy += row.lambda;
    }
    const double count = static_cast<double>(rows.size());
    const double det = count * sgg - sg * sg;
    if (std::abs(det) < 1e-12 * count * sgg)
        throw std::domain_error("fit_model: degenerate design (all N equal)");
    FitResult fit;
    fit.model = model;
    fit.a = (count * sgy - sg * sy) / det;
    fit.b = (sgg * sy - sg * sgy) / det;
    fit.n_lo = rows.front().n;
    fit.n_hi = rows.back().n;
    double ss = 0.0;
    for (const SweepRow& row : rows) {
        const double res = row.lambda - (fit.a * g(row.n) + fit.b);
        ss += res * res;
        fit.max_rel_deviation = std::max(fit.max_rel_deviation, std::abs(res) / row.lambda);
    }
    fit.rms_residual = std::sqrt(ss / count);
    return fit;
}

/// Jackson's bound on the best sup-norm approximation error of a function on
/// [-1, 1] by polynomials of degree N, given a bound on its m-th derivative:
///     E_N <= (12 / (m + 1)) * (6e / N)^m * sup|f^(m)|.
[[nodiscard]] inline double jackson_bound(int m, int n, double sup_mth_deriv) {
    if (m < 0 || n <= m) throw std::domain_error("jackson_bound: need N > m >= 0");
    if (sup_mth_deriv < 0.0) throw std::domain_error("jackson_bound: negative derivative bound");
    return 12.0 / (m + 1.0) * std::pow(6.0 * std::numbers::e / n, m) * sup_mth_deriv;
}

/// Bound on the derivative error ||x' - (x^N)'|| of a degree-N collocation
/// interpolant in terms of the Lebesgue constant and the best-approximation
/// errors of the solution (degree N) and its derivative (degree N-1):
///     (1 + 2N^2) * best_err_xdot + N^2 * (1 + lambda) * best_err_x.
[[nodiscard]] inline double derivative_error_bound(int n, double lambda, double best_err_x,
                                                   double best_err_xdot) {
    if (n < 1) throw std::domain_error("derivative_error_bound: need N >= 1");
    if (lambda < 0.0 || best_err_x < 0.0 || best_err_xdot < 0.0)
        throw std::domain_error("derivative_error_bound: arguments must be nonnegative");
    const double n2 = static_cast<double>(n) * n;
    return (1.0 + 2.0 * n2) * best_err_xdot + n2 * (1.0 + lambda) * best_err_x;
}

namespace detail {

/// Indices of the collocation points within a node set: the quadrature points
/// only, so an augmented endpoint (which carries no collocated dynamics
/// equation) is skipped.
[[nodiscard]] inline std::vector<std::size_t> collocation_indices(const nodes::NodeSet& ns) {
    using PF = nodes::PointSetFamily;
    std::size_t first = 0, last = ns.size();
    if (ns.family == PF::GaussPlusLeftEnd || ns.family == PF::RadauRightPlusLeftEnd) first = 1;
    if (ns.family == PF::GaussPlusRightEnd || ns.family == PF::RadauLeftPlusRightEnd) --last;
    std::vector<std::size_t> idx;
    idx.reserve(last - first);
    for (std::size_t k = first; k < last; ++k) idx.push_back(k);
    return idx;
}

}  // namespace detail

/// Interpolates the exact solution on the family's nodes and reports the
/// collocation residuals r_k = (x^N)'(tau_k) - f(x^N(tau_k)) at the
/// collocation points, plus the boundary residual r0 = x^N(-1) - x0 (exact
/// when -1 is an interpolation node and the solution meets its initial value).
[[nodiscard]] inline ResidualReport collocation_residual(const CollocationProblem& problem,
                                                         nodes::PointSetFamily family, int n) {
    const nodes::NodeSet ns = nodes::build_point_set(family, n);
    const auto basis = interp::barycentric_weights(ns.nodes);
    std::vector<double> values(ns.size());
    for (std::size_t j = 0; j < ns.size(); ++j) values[j] = problem.exact_solution(ns.nodes[j]);

    ResidualReport report;
    report.family = family;
    report.n = n;
    report.r0 = interp::interpolate(basis, values, -1.0) - problem.initial_value;
    report.sup_norm = std::abs(report.r0);
    if (ns.size() >= 2) {
        const auto d = interp::differentiation_matrix(basis);
        for (std::size_t k : detail::collocation_indices(ns)) {
            double deriv = 0.0;
            for (std::size_t j = 0; j < ns.size(); ++j) deriv += d[k][j] * values[j];
            const double rk = deriv - problem.dynamics(values[k]);
            report.r.push_back(rk);
            report.sup_norm = std::max(report.sup_norm, std::abs(rk));
        }
    }
    return report;
}

/// Grid sup-norm of x' - (x^N)' over [-1, 1] for the interpolant of the exact
/// solution on the family's nodes.
[[nodiscard]] inline double interp_derivative_error(const CollocationProblem& problem,
                                                    nodes::PointSetFamily family, int n) {
    const nodes::NodeSet ns = nodes::build_point_set(family, n);
    const auto basis = interp::barycentric_weights(ns.nodes);
    std::vector<double> values(ns.size());
    for (std::size_t j = 0; j < ns.size(); ++j) values[j] = problem.exact_solution(ns.nodes[j]);
    return grid_sup_norm([&](double t) {
        return problem.exact_derivative(t) - interp::interpolant_derivative(basis, values, t);
    });
}

/// The fixed test-problem suite: autonomous scalar dynamics with closed-form
/// solutions smooth on [-1, 1].
[[nodiscard]] inline const std::vector<CollocationProblem>& problem_suite() {
    static const std::vector<CollocationProblem> suite = [] {
        std::vector<CollocationProblem> ps;
        ps.push_back({"linear",  // dx/dtau = 1, x = tau + 2
                      [](double) { return 1.0; }, 1.0, [](double t) { return t + 2.0; },
                      [](double) { return 1.0; }});
        ps.push_back({"exp",  // dx/dtau = x, x = e^(tau+1)
                      [](double x) { return x; }, 1.0, [](double t) { return std::exp(t + 1.0); },
                      [](double t) { return std::exp(t + 1.0); }});
        ps.push_back({"rational",  // dx/dtau = x^2, x = 1/(2 - tau)
                      [](double x) { return x * x; }, 1.0 / 3.0,
                      [](double t) { return 1.0 / (2.0 - t); },
                      [](double t) { return 1.0 / ((2.0 - t) * (2.0 - t)); }});
        ps.push_back({"exp-shifted",  // dx/dtau = x with doubled initial data
                      [](double x) { return x; }, 2.0,
                      [](double t) { return 2.0 * std::exp(t + 1.0); },
                      [](double t) { return 2.0 * std::exp(t + 1.0); }});
        for (const CollocationProblem& p : ps) p.validate();
        return ps;
    }();
    return suite;
}

/// Looks up a suite problem by name; throws std::domain_error if absent.
[[nodiscard]] inline const CollocationProblem& find_problem(const std::string& name) {
    for (const CollocationProblem& p : problem_suite())
        if (p.name == name) return p;
    throw std::domain_error("unknown problem '" + name + "' (suite: linear, exp, rational, "
                            "exp-shifted)");
}

}  // namespace leb::analysis
