#include "cfhmm/hmm.hpp"

#include <cmath>

namespace cfhmm {

DiscreteGradient discrete_gradient(const CartesianMesh& mesh, int cell, double w_cell,
                                   const std::array<double, 4>& w_edge) {
    const Cell& c = mesh.cells[cell];
    DiscreteGradient g;
    g.mean.setZero();
    for (int s = 0; s < 4; ++s) {
        const Edge& e = mesh.edges[c.edge[s]];
        g.mean += e.length * (w_edge[s] - w_cell) * CartesianMesh::side_normal(s);
    }
    g.mean /= c.area;

    const double sqrt_d = std::sqrt(2.0);
    for (int s = 0; s < 4; ++s) {
        const Edge& e = mesh.edges[c.edge[s]];
        const Eigen::Vector2d n = CartesianMesh::side_normal(s);
        const double d = mesh.wall_distance(s);
        const double residual = w_edge[s] - w_cell - g.mean.dot(e.midpoint - c.center);
        g.sub[s] = g.mean + (sqrt_d / d) * residual * n;
    }
    return g;
}

LocalDiffusionMatrix local_diffusion_matrix(const CartesianMesh& mesh, int cell,
                                            const Eigen::Matrix2d& lam) {
    // SPD check via the closed-form eigenvalues of the symmetric part.
    const double mean = 0.5 * (lam(0, 0) + lam(1, 1));
    const double rad = std::hypot(0.5 * (lam(0, 0) - lam(1, 1)), lam(0, 1));
    if (mean - rad <= 0.0) throw SingularTensor("diffusion tensor has a non-positive eigenvalue");

    // Gradients of the four basis functions (w_K = 0, w_{sigma_i} = 1).
    std::array<DiscreteGradient, 4> basis;
    for (int i = 0; i < 4; ++i) {
        std::array<double, 4> w{0.0, 0.0, 0.0, 0.0};
        w[i] = 1.0;
        basis[i] = discrete_gradient(mesh, cell, 0.0, w);
    }

    std::array<double, 4> sub_area{};
    for (int s = 0; s < 4; ++s) {
        const Edge& e = mesh.edges[mesh.cells[cell].edge[s]];
        sub_area[s] = 0.5 * e.length * mesh.wall_distance(s);
    }

    LocalDiffusionMatrix out;
    out.cell = cell;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            double a = 0.0;
            for (int s = 0; s < 4; ++s)
                a += sub_area[s] * (lam * basis[i].sub[s]).dot(basis[j].sub[s]);
            out.W(i, j) = a;
            out.W(j, i) = a;
        }
    }
    return out;
}

} // namespace cfhmm
