#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "leb/common.hpp"
#include "leb/jacobi.hpp"
#include "leb/nodes.hpp"

using leb::jacobi::jacobi_deriv;
using leb::jacobi::jacobi_eval;
using leb::nodes::build_explicit_point_set;
using leb::nodes::build_point_set;
using leb::nodes::jacobi_zero_table;
using leb::nodes::jacobi_zeros;
using leb::nodes::NodeSet;
using leb::nodes::PointSetFamily;
using leb::nodes::zero_angle_diagnostics;

TEST_CASE("closed-form zeros", "[nodes]") {
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    const auto legendre2 = jacobi_zeros({0.0, 0.0}, 2);
    REQUIRE(legendre2.size() == 2);
    CHECK(legendre2[0] == Catch::Approx(-inv_sqrt3).epsilon(1e-15));
    CHECK(legendre2[1] == Catch::Approx(inv_sqrt3).epsilon(1e-15));
    CHECK(legendre2[0] == -legendre2[1]);  // symmetrized exactly

    const auto legendre1 = jacobi_zeros({0.0, 0.0}, 1);
    REQUIRE(legendre1.size() == 1);
    CHECK(legendre1[0] == 0.0);

    const auto radau1 = jacobi_zeros({1.0, 0.0}, 1);
    REQUIRE(radau1.size() == 1);
    CHECK(radau1[0] == Catch::Approx(-1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("zero residuals are small relative to the local scale", "[nodes]") {
    // |P(z)| / |P'(z)| estimates the distance from z to the true zero.  It
    // must stay below a relative 1e-12 of the local zero spacing, plus an
    // absolute floor of a few ulp: near the extreme zeros of degree ~200 the
    // spacing shrinks to ~1e-4, where 1e-12 * spacing dips under the ulp of
    // the node position itself and no double-precision zero could do better.
    for (const leb::jacobi::JacobiParams params :
         {leb::jacobi::JacobiParams{0.0, 0.0}, leb::jacobi::JacobiParams{1.0, 0.0}}) {
        for (int n : {5, 40, 120, 200}) {
            const auto zeros = jacobi_zeros(params, n);
            REQUIRE(static_cast<int>(zeros.size()) == n);
            for (std::size_t i = 0; i < zeros.size(); ++i) {
                CHECK(zeros[i] > -1.0);
                CHECK(zeros[i] < 1.0);
                if (i > 0) CHECK(zeros[i - 1] < zeros[i]);
                const double left = (i == 0) ? -1.0 : zeros[i - 1];
                const double right = (i + 1 == zeros.size()) ? 1.0 : zeros[i + 1];
                const double spacing = std::min(zeros[i] - left, right - zeros[i]);
                const double deriv_scale = std::abs(jacobi_deriv(params, n, zeros[i]));
                CHECK(std::abs(jacobi_eval(params, n, zeros[i])) <=
                      deriv_scale * (1e-12 * spacing + 2e-15));
            }
        }
    }
}

TEST_CASE("zero table matches per-degree computation", "[nodes]") {
    const auto table = jacobi_zero_table({1.0, 0.0}, 12);
    REQUIRE(table.size() == 12);
    for (int n : {1, 5, 12}) {
        const auto direct = jacobi_zeros({1.0, 0.0}, n);
        const auto& from_table = table[static_cast<std::size_t>(n) - 1];
        REQUIRE(direct.size() == from_table.size());
        for (std::size_t i = 0; i < direct.size(); ++i)
            CHECK(direct[i] == Catch::Approx(from_table[i]).margin(1e-15));
    }
}

TEST_CASE("point-set family construction", "[nodes]") {
    const NodeSet gauss_left1 = build_point_set(PointSetFamily::GaussPlusLeftEnd, 1);
    REQUIRE(gauss_left1.nodes == std::vector<double>{-1.0, 0.0});
    CHECK(gauss_left1.thetas[0] == leb::pi);  // exact angle for the exact endpoint

    const NodeSet radau2 = build_point_set(PointSetFamily::RadauRight, 2);
    REQUIRE(radau2.nodes.size() == 2);
    CHECK(radau2.nodes[0] == Catch::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(radau2.nodes[1] == 1.0);
    CHECK(radau2.thetas[1] == 0.0);

    const NodeSet radau_left2 = build_point_set(PointSetFamily::RadauLeft, 2);
    REQUIRE(radau_left2.nodes.size() == 2);
    CHECK(radau_left2.nodes[0] == -1.0);
    CHECK(radau_left2.nodes[1] == Catch::Approx(1.0 / 3.0).epsilon(1e-15));

    // N = 1 Radau degenerates to a single endpoint.
    CHECK(build_point_set(PointSetFamily::RadauRight, 1).nodes == std::vector<double>{1.0});
    CHECK(build_point_set(PointSetFamily::RadauLeft, 1).nodes == std::vector<double>{-1.0});

    CHECK(build_point_set(PointSetFamily::Equidistant, 1).nodes == std::vector<double>{0.0});
    CHECK(build_point_set(PointSetFamily::Equidistant, 5).nodes ==
          std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});

    const NodeSet rrpl = build_point_set(PointSetFamily::RadauRightPlusLeftEnd, 3);
    REQUIRE(rrpl.nodes.size() == 4);
    CHECK(rrpl.nodes.front() == -1.0);
    CHECK(rrpl.nodes.back() == 1.0);

    const NodeSet rlpr = build_point_set(PointSetFamily::RadauLeftPlusRightEnd, 3);
    REQUIRE(rlpr.nodes.size() == 4);
    CHECK(rlpr.nodes.front() == -1.0);
    CHECK(rlpr.nodes.back() == 1.0);
}

TEST_CASE("RadauLeft is the exact mirror of RadauRight", "[nodes]") {
    const NodeSet right = build_point_set(PointSetFamily::RadauRight, 7);
    const NodeSet left = build_point_set(PointSetFamily::RadauLeft, 7);
    REQUIRE(right.nodes.size() == left.nodes.size());
    for (std::size_t i = 0; i < right.nodes.size(); ++i)
        CHECK(left.nodes[i] == -right.nodes[right.nodes.size() - 1 - i]);  // bitwise equal
}

TEST_CASE("node sets satisfy their structural invariants", "[nodes]") {
    for (PointSetFamily family : leb::nodes::buildable_families()) {
        for (int n : {1, 2, 3, 8, 50}) {
            const NodeSet ns = build_point_set(family, n);
            CHECK_NOTHROW(ns.validate());
            CHECK(ns.n_quadrature == n);
            const bool augmented = family == PointSetFamily::GaussPlusLeftEnd ||
                                   family == PointSetFamily::GaussPlusRightEnd ||
                                   family == PointSetFamily::RadauRightPlusLeftEnd ||
                                   family == PointSetFamily::RadauLeftPlusRightEnd;
            CHECK(static_cast<int>(ns.size()) == n + (augmented ? 1 : 0));
            for (std::size_t i = 1; i < ns.thetas.size(); ++i)
                CHECK(ns.thetas[i - 1] > ns.thetas[i]);
        }
    }
}

TEST_CASE("Gauss angles are symmetric about pi/2", "[nodes]") {
    for (int n : {2, 9, 40}) {
        const NodeSet ns = build_point_set(PointSetFamily::GaussLegendre, n);
        for (int i = 1; i <= n; ++i)
            CHECK(ns.thetas[i - 1] + ns.thetas[n - i] == Catch::Approx(leb::pi).margin(1e-12));
    }
}

TEST_CASE("explicit point sets", "[nodes]") {
    const NodeSet ns = build_explicit_point_set({-0.5, 0.1, 0.9});
    CHECK(ns.family == PointSetFamily::Explicit);
    CHECK(ns.n_quadrature == 3);
    CHECK_NOTHROW(ns.validate());
    CHECK_THROWS_AS(build_explicit_point_set({}), std::domain_error);
    CHECK_THROWS_AS(build_explicit_point_set({0.2, 0.1}), std::domain_error);
    CHECK_THROWS_AS(build_explicit_point_set({-1.5, 0.0}), std::domain_error);
}

TEST_CASE("construction rejects invalid requests", "[nodes]") {
    CHECK_THROWS_AS(build_point_set(PointSetFamily::GaussLegendre, 0), std::domain_error);
    CHECK_THROWS_AS(build_point_set(PointSetFamily::GaussLegendre, 201), std::domain_error);
    CHECK_THROWS_AS(build_point_set(PointSetFamily::Explicit, 3), std::domain_error);
    CHECK_THROWS_AS(jacobi_zero_table({0.0, 0.0}, 0), std::domain_error);
    CHECK_THROWS_AS(jacobi_zero_table({-2.0, 0.0}, 5), std::domain_error);
    CHECK_THROWS_AS(leb::nodes::family_from_string("gaussian"), std::domain_error);
    CHECK(leb::nodes::family_from_string("radau-right-plus-left") ==
          PointSetFamily::RadauRightPlusLeftEnd);
}

TEST_CASE("Gauss zero-angle bracketing", "[nodes]") {
    // Closed-form check at N=2: theta_1 = arccos(-1/sqrt(3)).
    const NodeSet gauss2 = build_point_set(PointSetFamily::GaussLegendre, 2);
    CHECK(gauss2.thetas[0] == Catch::Approx(2.186276035465284).epsilon(1e-15));
    const auto diag2 = zero_angle_diagnostics(gauss2);
    REQUIRE(diag2.checks.size() == 2);
    CHECK(diag2.all_ok);
    const double phi1 = leb::pi - gauss2.thetas[0];
    CHECK(phi1 >= leb::pi / 5.0);
    CHECK(phi1 <= 2.0 * leb::pi / 5.0);

    for (int n : {1, 7, 33, 100}) {
        const auto diag = zero_angle_diagnostics(build_point_set(PointSetFamily::GaussLegendre, n));
        CHECK(diag.all_ok);
        CHECK(diag.worst_margin > 0.0);
        CHECK(diag.separation.empty());
    }
}

TEST_CASE("Radau zero-angle bracketing and separation", "[nodes]") {
    for (int n : {2, 10, 41, 100}) {
        const auto diag = zero_angle_diagnostics(build_point_set(PointSetFamily::RadauRight, n));
        CHECK(static_cast<int>(diag.checks.size()) == n - 1);
        CHECK(static_cast<int>(diag.separation.size()) == std::max(n - 2, 0));
        CHECK(diag.all_ok);
        CHECK(diag.worst_margin > 0.0);
    }
    // The bounds only address Gauss and Radau-right sets.
    CHECK_THROWS_AS(zero_angle_diagnostics(build_point_set(PointSetFamily::RadauLeft, 5)),
                    std::domain_error);
    CHECK_THROWS_AS(zero_angle_diagnostics(build_point_set(PointSetFamily::Equidistant, 5)),
                    std::domain_error);
}

TEST_CASE("Radau zeros interlace the neighboring Legendre zeros", "[nodes]") {
    const int n_max = 100;
    const auto legendre = jacobi_zero_table({0.0, 0.0}, n_max);
    const auto radau = jacobi_zero_table({1.0, 0.0}, n_max - 1);
    for (int n = 2; n <= n_max; ++n) {
        const auto& z = radau[static_cast<std::size_t>(n) - 2];       // zeros of P_{N-1}^{(1,0)}
        const auto& below = legendre[static_cast<std::size_t>(n) - 2];  // zeros of P_{N-1}
        const auto& above = legendre[static_cast<std::size_t>(n) - 1];  // zeros of P_N
        for (std::size_t i = 0; i < z.size(); ++i) {
            CHECK(above[i] < z[i]);
            CHECK(z[i] < below[i]);
        }
    }
}

TEST_CASE("Legendre derivative scaling at the zeros stays in its bracket", "[nodes]") {
    // |P_N'(tau_i)| * i^1.5 / N^2 over the nonpositive zeros (i counted from
    // the left) stays inside an empirically frozen band for 10 <= N <= 200.
    const auto table = jacobi_zero_table({0.0, 0.0}, 200);
    double qmin = 1e300, qmax = 0.0;
    for (int n = 10; n <= 200; ++n) {
        const auto& zeros = table[static_cast<std::size_t>(n) - 1];
        for (std::size_t idx = 0; idx < zeros.size() && zeros[idx] <= 0.0; ++idx) {
            const double i = static_cast<double>(idx + 1);
            const double q = std::abs(jacobi_deriv({0.0, 0.0}, n, zeros[idx])) *
                             std::pow(i, 1.5) / (static_cast<double>(n) * n);
            qmin = std::min(qmin, q);
            qmax = std::max(qmax, q);
        }
    }
    CHECK(qmin >= 0.14);
    CHECK(qmax <= 0.34);
}
