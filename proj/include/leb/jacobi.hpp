#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "leb/common.hpp"

/// Evaluation of Jacobi polynomials P_n^{(alpha,beta)} and their first
/// derivatives on [-1, 1], in the standard normalization
/// P_n^{(alpha,beta)}(1) = C(n + alpha, n).
namespace leb::jacobi {

/// Exponent pair (alpha, beta) of the Jacobi weight (1-tau)^alpha (1+tau)^beta.
/// Orthogonality requires both exponents to exceed -1.
struct JacobiParams {
    double alpha;
    double beta;

    void validate() const {
        if (!(alpha > -1.0) || !(beta > -1.0))
            throw std::domain_error("JacobiParams: require alpha > -1 and beta > -1, got alpha=" +
                                    std::to_string(alpha) + " beta=" + std::to_string(beta));
    }
};

namespace detail {

/// Root finders may overshoot [-1, 1] by a whisker; accept that, reject more.
inline constexpr double tau_overshoot = 1e-8;

inline void check_tau(double tau) {
    if (std::abs(tau) > 1.0 + tau_overshoot)
        throw std::domain_error("jacobi: tau=" + std::to_string(tau) + " outside [-1, 1]");
}

/// Three-term recurrence ascending in degree; stable on [-1, 1] for the
/// parameter ranges used here.
[[nodiscard]] inline double recurrence(double a, double b, int n, double tau) {
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = 0.5 * (a + b + 2.0) * tau + 0.5 * (a - b);
    for (int q = 2; q <= n; ++q) {
        const double s = 2.0 * q + a + b;  // > 0 for q >= 2, a, b > -1
        const double den = 2.0 * q * (q + a + b) * (s - 2.0);
        const double aq = s * (s - 1.0) / (2.0 * q * (q + a + b));
        const double bq = (b * b - a * a) * (s - 1.0) / den;
        const double cq = (q + a - 1.0) * (q + b - 1.0) * s / (q * (q + a + b) * (s - 2.0));
        const double pnext = (aq * tau - bq) * p - cq * pm1;
        pm1 = p;
        p = pnext;
    }
    return p;
}

}  // namespace detail

/// P_n^{(alpha,beta)}(tau).  Throws std::domain_error for invalid parameters,
/// negative degree, or tau outside [-1, 1] (beyond a 1e-8 overshoot margin).
[[nodiscard]] inline double jacobi_eval(const JacobiParams& params, int n, double tau) {
    params.validate();
    if (n < 0) throw std::domain_error("jacobi_eval: degree must be >= 0");
    detail::check_tau(tau);
    return detail::recurrence(params.alpha, params.beta, n, tau);
}

/// d/dtau P_n^{(alpha,beta)}(tau) via the classical identity (Szego, eq.
/// 4.21.7): the derivative is ((n + alpha + beta + 1) / 2) * P_{n-1} of the
/// incremented parameter pair (alpha+1, beta+1).
[[nodiscard]] inline double jacobi_deriv(const JacobiParams& params, int n, double tau) {
    params.validate();
    if (n < 1) throw std::domain_error("jacobi_deriv: degree must be >= 1");
    detail::check_tau(tau);
    const double factor = 0.5 * (n + params.alpha + params.beta + 1.0);
    return factor * detail::recurrence(params.alpha + 1.0, params.beta + 1.0, n - 1, tau);
}

}  // namespace leb::jacobi
