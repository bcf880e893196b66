#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leb/common.hpp"
#include "leb/interp.hpp"

/// The Lebesgue function lambda(tau) = sum_j |L_j(tau)|, its maximum over
/// [-1, 1] (the Lebesgue constant), and the classical Erdos lower bound that
/// every node set must obey.
namespace leb::lebesgue {

/// lambda(tau) = sum_j |L_j(tau)| >= 1, the pointwise amplification factor of
/// interpolation on the basis nodes.  Equals exactly 1 at every node.
[[nodiscard]] inline double lebesgue_function(const interp::BarycentricBasis& basis, double tau) {
    if (std::abs(tau) > 1.0 + 1e-12)
        throw std::domain_error("lebesgue_function: tau outside [-1, 1]");
    if (basis.size() == 1) return 1.0;
    if (basis.hit_index(tau) >= 0) return 1.0;
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const double t = basis.weights[k] / (tau - basis.nodes[k]);
        num += std::abs(t);
        den += t;
    }
    return num / std::abs(den);
}

/// Location and value of the Lebesgue-function maximum within one search
/// subinterval.
struct IntervalMax {
    int interval = 0;
    double value = 0.0;
    double argmax = 0.0;
};

/// The Lebesgue constant with its maximizer and the per-subinterval maxima
/// the search visited.
struct LebesgueReport {
    double constant = 1.0;
    double argmax_tau = 0.0;
    std::vector<IntervalMax> interval_maxima;
    int grid_resolution = 0;
    double refinement_tolerance = 0.0;
};

namespace detail {

inline constexpr int samples_per_interval = 33;
inline constexpr int golden_max_iter = 200;

/// Golden-section maximization of f on [a, b] down to an abscissa tolerance.
/// Returns (argmax, max).  The interval label only decorates the error
/// message on iteration-cap overrun.
template <typename F>
[[nodiscard]] std::pair<double, double> golden_max(F&& f, double a, double b, double tol,
                                                   int interval_label) {
    constexpr double invphi = 0.6180339887498948482;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int iter = 0; iter < golden_max_iter; ++iter) {
        if (b - a <= tol) {
            const double x = 0.5 * (a + b);
            return {x, std::max({fc, fd, f(x)})};
        }
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    throw numerical_error("lebesgue_constant: golden-section search on interval " +
                          std::to_string(interval_label) + " did not converge");
}

}  // namespace detail

/// Computes the Lebesgue constant max_{[-1,1]} lambda(tau) by per-subinterval
/// search: lambda is smooth strictly between adjacent nodes (the |.| kinks sit
/// at the nodes), so each inter-node interval — plus the outer intervals
/// [-1, tau_min] and [tau_max, 1] when the endpoints are not nodes — is
/// sampled at 33 uniform points and every sampled ascent is refined by
/// golden-section down to `refinement_tolerance` in tau.
[[nodiscard]] inline LebesgueReport lebesgue_constant(const interp::BarycentricBasis& basis,
                                                      double refinement_tolerance = 1e-9) {
    LebesgueReport report;
    report.grid_resolution = detail::samples_per_interval;
    report.refinement_tolerance = refinement_tolerance;
    if (basis.size() == 0) throw std::domain_error("lebesgue_constant: empty basis");
    if (basis.size() == 1) {  // lambda is identically 1
        report.constant = 1.0;
        report.argmax_tau = basis.nodes[0];
        return report;
    }

    std::vector<std::pair<double, double>> intervals;
    if (basis.nodes.front() > -1.0) intervals.emplace_back(-1.0, basis.nodes.front());
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
        intervals.emplace_back(basis.nodes[i], basis.nodes[i + 1]);
    if (basis.nodes.back() < 1.0) intervals.emplace_back(basis.nodes.back(), 1.0);

    const auto lambda = [&](double tau) { return lebesgue_function(basis, tau); };

    report.constant = 1.0;
    report.argmax_tau = basis.nodes[0];
    for (std::size_t iv = 0; iv < intervals.size(); ++iv) {
        const auto [lo, hi] = intervals[iv];
        constexpr int m = detail::samples_per_interval;
        double xs[m], fs[m];
        for (int i = 0; i < m; ++i) {
            xs[i] = lo + (hi - lo) * i / (m - 1.0);
            fs[i] = lambda(xs[i]);
        }
        xs[0] = lo;
        xs[m - 1] = hi;
        IntervalMax best{static_cast<int>(iv), fs[0], xs[0]};
        for (int i = 1; i < m; ++i)
            if (fs[i] > best.value) best = {static_cast<int>(iv), fs[i], xs[i]};
        // Refine around every sampled ascent (augmented sets can carry more
        // than one hump per interval); boundary samples count as ascents so a
        // maximum hugging an interval end is not missed.
        for (int i = 0; i < m; ++i) {
            const bool left_ok = i == 0 || fs[i] >= fs[i - 1];
            const bool right_ok = i == m - 1 || fs[i] >= fs[i + 1];
            if (!(left_ok && right_ok)) continue;
            const double a = xs[std::max(i - 1, 0)];
            const double b = xs[std::min(i + 1, m - 1)];
            const auto [x, fx] =
                detail::golden_max(lambda, a, b, refinement_tolerance, static_cast<int>(iv));
            if (fx > best.value) best = {static_cast<int>(iv), fx, x};
        }
        report.interval_maxima.push_back(best);
        if (best.value > report.constant) {
            report.constant = best.value;
            report.argmax_tau = best.argmax;
        }
    }
    return report;
}

/// The Erdos lower bound (2/pi) * ln(num_points) + 0.52125 that the Lebesgue
/// constant of any num_points-node interpolation scheme on [-1, 1] exceeds.
/// The additive constant is the classical (2/pi)(gamma + ln(4/pi)).
[[nodiscard]] inline double erdos_lower_bound(int num_points) {
    if (num_points < 1) throw std::domain_error("erdos_lower_bound: need num_points >= 1");
    return (2.0 / pi) * std::log(static_cast<double>(num_points)) + 0.52125;
}

}  // namespace leb::lebesgue
