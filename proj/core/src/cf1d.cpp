#include "cfhmm/cf1d.hpp"

#include <cmath>

#include "cfhmm/cflux.hpp"
#include "cfhmm/errors.hpp"
#include "cfhmm/transport.hpp"

namespace cfhmm {

Grid1D make_grid_1d(std::vector<double> nodes, std::vector<double> flux_points) {
    if (nodes.size() < 2) throw DomainError("grid needs at least two nodes");
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j)
        if (nodes[j + 1] <= nodes[j]) throw DomainError("nodes must be strictly increasing");

    Grid1D g;
    g.nodes = std::move(nodes);
    const std::size_t m = g.nodes.size() - 1;
    if (flux_points.empty()) {
        flux_points.resize(m);
        for (std::size_t j = 0; j < m; ++j) flux_points[j] = 0.5 * (g.nodes[j] + g.nodes[j + 1]);
    }
    if (flux_points.size() != m) throw DomainError("one flux point per interval required");
    g.alpha.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double a = (flux_points[j] - g.nodes[j]) / (g.nodes[j + 1] - g.nodes[j]);
        if (a <= 0.0 || a >= 1.0) throw DomainError("flux point outside its interval");
        g.alpha[j] = a;
    }
    g.flux_points = std::move(flux_points);
    return g;
}

double homogeneous_flux_1d(double c_left, double c_right, double lam, double v, double dx) {
    if (lam <= 0.0) throw DomainError("diffusion coefficient must be positive");
    // Equivalent to the exponentially-weighted closed form; reduces to the
    // classical SG flux and is independent of the flux-point location for
    // constant coefficients. B(-P) = A_sg(P) + 1, B(P) = A_sg(-P) + 1.
    const double p = v * dx / lam;
    return (lam / dx) * ((a_sg(p) + 1.0) * c_left - (a_sg(-p) + 1.0) * c_right);
}

double inhomogeneous_flux_1d(double s_left, double s_right, double peclet, double alpha,
                             double dx) {
    return dx * (z_function(-peclet, 1.0 - alpha) * s_left - z_function(peclet, alpha) * s_right);
}

std::vector<double> solve_1d(const Grid1D& grid, double lam, double v,
                             const std::function<double(double)>& source, double c_left,
                             double c_right) {
    const int m = grid.n_intervals();
    const int n = m + 1;
    std::vector<double> fi(m), cell_a(m), cell_b(m);  // f_{sigma_j} = a c_j + b c_{j+1} + fi
    for (int j = 0; j < m; ++j) {
        const double dx = grid.nodes[j + 1] - grid.nodes[j];
        const double p = v * dx / lam;
        cell_a[j] = (lam / dx) * (a_sg(p) + 1.0);
        cell_b[j] = -(lam / dx) * (a_sg(-p) + 1.0);
        fi[j] = inhomogeneous_flux_1d(source(grid.nodes[j]), source(grid.nodes[j + 1]), p,
                                      grid.alpha[j], dx);
    }

    // Tridiagonal flux balance, Thomas algorithm.
    std::vector<double> lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
    diag[0] = 1.0;
    rhs[0] = c_left;
    diag[n - 1] = 1.0;
    rhs[n - 1] = c_right;
    for (int j = 1; j < n - 1; ++j) {
        lower[j] = -cell_a[j - 1];
        diag[j] = cell_a[j] - cell_b[j - 1];
        upper[j] = cell_b[j];
        rhs[j] = source(grid.nodes[j]) * (grid.flux_points[j] - grid.flux_points[j - 1]) -
                 (fi[j] - fi[j - 1]);
    }

    std::vector<double> c_star(n), d_star(n);
    c_star[0] = upper[0] / diag[0];
    d_star[0] = rhs[0] / diag[0];
    for (int j = 1; j < n; ++j) {
        const double denom = diag[j] - lower[j] * c_star[j - 1];
        if (denom == 0.0) throw SingularSystem("tridiagonal breakdown");
        c_star[j] = upper[j] / denom;
        d_star[j] = (rhs[j] - lower[j] * d_star[j - 1]) / denom;
    }
    std::vector<double> c(n);
    c[n - 1] = d_star[n - 1];
    for (int j = n - 2; j >= 0; --j) c[j] = d_star[j] - c_star[j] * c[j + 1];
    return c;
}

} // namespace cfhmm
