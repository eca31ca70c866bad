#include <cmath>
#include <vector>

#include <doctest.h>

#include "cfhmm/cf1d.hpp"
#include "cfhmm/errors.hpp"

using namespace cfhmm;

namespace {

std::vector<double> uniform_nodes(int n) {
    std::vector<double> x(n + 1);
    for (int i = 0; i <= n; ++i) x[i] = static_cast<double>(i) / n;
    return x;
}

double bernoulli(double t) {
    if (std::abs(t) < 1e-12) return 1.0 - t / 2.0;
    return t / std::expm1(t);
}

}  // namespace

TEST_SUITE("cf1d") {

TEST_CASE("grid construction and scaled coordinates") {
    Grid1D g = make_grid_1d({0.0, 0.25, 1.0});
    CHECK(g.n_intervals() == 2);
    CHECK(g.flux_points[0] == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(g.alpha[0] == doctest::Approx(0.5).epsilon(1e-14));

    Grid1D custom = make_grid_1d({0.0, 3.0}, {1.0});
    CHECK(custom.alpha[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    // x_sigma = (1 - alpha) x_j + alpha x_{j+1} reproduced to 1e-14.
    CHECK((1.0 - custom.alpha[0]) * 0.0 + custom.alpha[0] * 3.0 ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("homogeneous flux: pure diffusion, constant state, SG form") {
    // V = 0: two-point flux.
    CHECK(homogeneous_flux_1d(1.0, 3.0, 2.0, 0.0, 0.5) ==
          doctest::Approx(-2.0 * (3.0 - 1.0) / 0.5).epsilon(1e-14));
    // Constant state: f = V c.
    CHECK(homogeneous_flux_1d(2.5, 2.5, 0.7, 3.0, 0.2) ==
          doctest::Approx(3.0 * 2.5).epsilon(1e-13));
    // Matches the classical SG flux (Lam/dx)(B(-P) c_j - B(P) c_{j+1}).
    const double lam = 0.8, v = 2.0, dx = 0.3;
    const double p = v * dx / lam;
    const double sg = (lam / dx) * (bernoulli(-p) * 1.7 - bernoulli(p) * (-0.4));
    CHECK(homogeneous_flux_1d(1.7, -0.4, lam, v, dx) == doctest::Approx(sg).epsilon(1e-13));
}

TEST_CASE("inhomogeneous flux reference values") {
    CHECK(inhomogeneous_flux_1d(0.0, 0.0, 2.3, 0.4, 1.0) == 0.0);
    // P = 0, alpha = 1/2, equal sources: Z weights coincide and cancel.
    CHECK(inhomogeneous_flux_1d(4.2, 4.2, 0.0, 0.5, 0.7) == 0.0);
    // P = 1, alpha = 1/2, s = (1, 0), dx = 1 -> Z(-1, 1/2).
    CHECK(inhomogeneous_flux_1d(1.0, 0.0, 1.0, 0.5, 1.0) ==
          doctest::Approx(0.16852902223280865).epsilon(1e-12));
}

TEST_CASE("solve_1d reproduces the linear profile of pure diffusion") {
    Grid1D g = make_grid_1d(uniform_nodes(7));
    const auto c = solve_1d(g, 1.0, 0.0, [](double) { return 0.0; }, 0.0, 1.0);
    for (std::size_t j = 0; j < c.size(); ++j)
        CHECK(c[j] == doctest::Approx(g.nodes[j]).epsilon(1e-12));
}

TEST_CASE("solve_1d is nodally exact for the constant-coefficient BVP") {
    // c(x) = (e^{Vx} - 1)/(e^V - 1) for Lam = 1, s = 0.
    const double v = 10.0;
    Grid1D g = make_grid_1d(uniform_nodes(10));
    const auto c = solve_1d(g, 1.0, v, [](double) { return 0.0; }, 0.0, 1.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
        const double exact = std::expm1(v * g.nodes[j]) / std::expm1(v);
        CHECK(std::abs(c[j] - exact) <= 1e-10);
    }
    CHECK(c[3] == doctest::Approx(0.00086652137580163044).epsilon(1e-10));
}

TEST_CASE("solve_1d is nodally exact with a constant source") {
    // Exact solution of -c'' + V c' = s with constant s: the complete flux
    // correction makes the scheme nodally exact even on nonuniform grids.
    const double v = 25.0, s = 3.0;
    auto exact = [&](double x) {
        // particular solution (s/V) x; homogeneous A + B e^{Vx}.
        const double b = -(s / v) / std::expm1(v);
        const double a = -b;
        return a + b * std::exp(v * x) + (s / v) * x;
    };
    Grid1D g = make_grid_1d({0.0, 0.07, 0.21, 0.5, 0.62, 0.8, 1.0});
    const auto c = solve_1d(g, 1.0, v, [&](double) { return s; }, exact(0.0), exact(1.0));
    for (std::size_t j = 0; j < c.size(); ++j) CHECK(std::abs(c[j] - exact(g.nodes[j])) <= 1e-10);
}

TEST_CASE("uniform second order in the Peclet number for a varying source") {
    // -c'' + V c' = sin(pi x), V = 100, c(0) = c(1) = 0.
    const double v = 100.0;
    const double pi = 3.14159265358979323846;
    const double a = 1.0 / (pi * pi + v * v);
    const double b = -v * a / pi;
    const double c2 = 2.0 * b / std::expm1(v);
    const double c1 = -c2 - b;
    auto exact = [&](double x) {
        return c1 + c2 * std::exp(v * x) + a * std::sin(pi * x) + b * std::cos(pi * x);
    };
    std::vector<double> errs;
    for (int n : {8, 16, 32, 64}) {
        Grid1D g = make_grid_1d(uniform_nodes(n));
        const auto c = solve_1d(g, 1.0, v, [&](double x) { return std::sin(pi * x); }, 0.0, 0.0);
        double e = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j)
            e = std::max(e, std::abs(c[j] - exact(g.nodes[j])));
        errs.push_back(e);
    }
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
        CHECK(std::log2(errs[i] / errs[i + 1]) >= 1.9);
    }
}

TEST_CASE("flux continuity on a nonuniform grid with off-center flux points") {
    // For constant coefficients the homogeneous flux between two nodes is
    // independent of the flux point; combined with the solved balance this
    // gives a single-valued total flux at every interior flux point.
    Grid1D g = make_grid_1d({0.0, 0.3, 0.55, 1.0}, {0.1, 0.4, 0.9});
    const double lam = 0.6, v = 4.0, s = 2.0;
    const auto c = solve_1d(g, lam, v, [&](double) { return s; }, 0.0, 1.0);
    std::vector<double> total(g.n_intervals());
    for (int j = 0; j < g.n_intervals(); ++j) {
        const double dx = g.nodes[j + 1] - g.nodes[j];
        const double p = v * dx / lam;
        total[j] = homogeneous_flux_1d(c[j], c[j + 1], lam, v, dx) +
                   inhomogeneous_flux_1d(s, s, p, g.alpha[j], dx);
    }
    // Flux balance between consecutive flux points: the jump equals the
    // integrated source over [x_{sigma_{j-1}}, x_{sigma_j}].
    for (int j = 1; j < g.n_intervals(); ++j) {
        const double expected = s * (g.flux_points[j] - g.flux_points[j - 1]);
        CHECK(total[j] - total[j - 1] == doctest::Approx(expected).epsilon(1e-11));
    }
}

}
