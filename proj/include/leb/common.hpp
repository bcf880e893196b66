#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

/// Shared numeric utilities: error types, mathematical constants, and the
/// reference grids used for sup-norm estimation on [-1, 1].
namespace leb {

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Thrown when an iterative numeric procedure fails to converge.  Carries a
/// human-readable context string (e.g. the offending zero index or search
/// interval) so callers can report exactly what failed.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Uniform grid of `count` points spanning [lo, hi] inclusive.
[[nodiscard]] inline std::vector<double> uniform_grid(std::size_t count, double lo = -1.0,
                                                      double hi = 1.0) {
    if (count < 2) throw std::domain_error("uniform_grid: need at least 2 points");
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    g.front() = lo;
    g.back() = hi;
    return g;
}

/// Chebyshev extrema cos(k*pi/n), k = 0..n, returned in increasing order.
[[nodiscard]] inline std::vector<double> chebyshev_extrema(std::size_t n) {
    if (n < 1) throw std::domain_error("chebyshev_extrema: need n >= 1");
    std::vector<double> g(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        g[k] = std::cos(static_cast<double>(n - k) * pi / static_cast<double>(n));
    g.front() = -1.0;
    g.back() = 1.0;
    return g;
}

/// The grid used throughout for estimating sup-norms on [-1, 1]: a
/// 10,001-point uniform grid merged with the extrema of T_10000.  The
/// Chebyshev points cluster near the endpoints where polynomial growth is
/// fastest, which the uniform grid alone would undersample.
[[nodiscard]] inline const std::vector<double>& sup_norm_grid() {
    static const std::vector<double> grid = [] {
        std::vector<double> g = uniform_grid(10001);
        const std::vector<double> c = chebyshev_extrema(10000);
        g.insert(g.end(), c.begin(), c.end());
        return g;
    }();
    return grid;
}

/// Maximum of |f| over the shared sup-norm grid.
template <typename F>
[[nodiscard]] double grid_sup_norm(F&& f) {
    double m = 0.0;
    for (double t : sup_norm_grid()) m = std::max(m, std::abs(f(t)));
    return m;
}

}  // namespace leb
