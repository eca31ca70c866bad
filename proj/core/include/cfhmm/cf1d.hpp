#ifndef CFHMM_CF1D_HPP
#define CFHMM_CF1D_HPP

#include <functional>
#include <vector>

namespace cfhmm {

/// One-dimensional complete-flux reference scheme on a nonuniform grid
/// with constant diffusion and velocity. Serves as an independent oracle
/// for the Z-function, the scaled coordinate, and the structure of the
/// inhomogeneous flux.
struct Grid1D {
    std::vector<double> nodes;        // x_0 < ... < x_N
    std::vector<double> flux_points;  // x_{sigma_j} in (x_j, x_{j+1})
    std::vector<double> alpha;        // scaled coordinates of the flux points

    int n_intervals() const { return static_cast<int>(nodes.size()) - 1; }
};

/// Flux points default to the interval midpoints (alpha = 1/2).
Grid1D make_grid_1d(std::vector<double> nodes, std::vector<double> flux_points = {});

/// f^H at a flux point, constant Lam > 0 and V; dx is the interval length.
/// Independent of the flux-point location for constant coefficients.
double homogeneous_flux_1d(double c_left, double c_right, double lam, double v, double dx);

/// f^I = dx (Z(-P, 1-alpha) s_left - Z(P, alpha) s_right).
double inhomogeneous_flux_1d(double s_left, double s_right, double peclet, double alpha,
                             double dx);

/// Solve the two-point boundary value problem (-Lam c' + c V)' = s with
/// Dirichlet values at both ends by complete-flux balance; returns nodal
/// values including the boundary nodes.
std::vector<double> solve_1d(const Grid1D& grid, double lam, double v,
                             const std::function<double(double)>& source, double c_left,
                             double c_right);

} // namespace cfhmm

#endif
