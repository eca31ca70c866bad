#include "cfhmm/transport.hpp"

#include <cmath>

namespace cfhmm {

double a_sg(double t) {
    const double a = std::abs(t);
    if (a < 1e-4) {
        // Taylor series around the removable singularity at t = 0.
        return t / 2.0 + t * t / 12.0 - (t * t) * (t * t) / 720.0;
    }
    if (t > 500.0) return t - 1.0;
    if (t < -500.0) return -1.0;
    return -t / std::expm1(-t) - 1.0;
}

namespace {

double normal_diffusivity(const CartesianMesh& mesh, const ProblemSpec& spec, int cell,
                          int edge) {
    const Eigen::Vector2d n = mesh.normal(cell, edge);
    return n.dot(spec.diffusion[cell] * n);
}

} // namespace

double lambda_sigma(const CartesianMesh& mesh, int edge, const ProblemSpec& spec,
                    LambdaVariant variant) {
    const Edge& e = mesh.edges[edge];
    double lam = 1.0;
    for (int cell : {e.cell_k, e.cell_l}) {
        if (cell < 0) continue;
        if (variant == LambdaVariant::Eigenvalue) {
            const EigenPair2x2 ep = eigen_2x2(spec.diffusion[cell]);
            lam = std::min({lam, ep.lambda1, ep.lambda2});
        } else {
            lam = std::min(lam, normal_diffusivity(mesh, spec, cell, edge));
        }
    }
    return lam;
}

AdvectiveFluxCoeffs advective_flux_coeffs(const CartesianMesh& mesh, int cell, int edge,
                                          const ProblemSpec& spec, LambdaVariant variant) {
    const double lam = lambda_sigma(mesh, edge, spec, variant);
    const double len = mesh.edges[edge].length;
    const double d = mesh.wall_distance(mesh.side_of(cell, edge));
    const double v = edge_normal_velocity(mesh, edge, cell, spec);
    const double scale = lam * len / d;
    const double t = d * v / lam;
    return {scale * a_sg(t), -scale * a_sg(-t)};
}

PecletNumber peclet_eigen(const CartesianMesh& mesh, int edge, int cell,
                          const ProblemSpec& spec) {
    const int other = mesh.opposite_cell(edge, cell);
    if (other < 0) throw DomainError("Peclet number requires an interior edge");
    const Eigen::Matrix2d& lam = spec.diffusion[cell];
    const double det = lam(0, 0) * lam(1, 1) - lam(0, 1) * lam(1, 0);
    const double norm = lam.cwiseAbs().maxCoeff();
    if (!(std::abs(det) > 1e-16 * norm * norm))
        throw SingularTensor("diffusion tensor is numerically singular");
    const Eigen::Vector2d v = edge_average_velocity(mesh, edge, spec);
    const Eigen::Vector2d n = mesh.normal(cell, edge);
    const double dist = (mesh.cells[cell].center - mesh.cells[other].center).norm();
    const Eigen::Vector2d lam_inv_v(
        (lam(1, 1) * v.x() - lam(0, 1) * v.y()) / det,
        (-lam(1, 0) * v.x() + lam(0, 0) * v.y()) / det);
    return {dist * lam_inv_v.dot(n), PecletVariant::Eigen};
}

PecletNumber peclet_grid(const CartesianMesh& mesh, int edge, int cell,
                         const ProblemSpec& spec) {
    const int other = mesh.opposite_cell(edge, cell);
    if (other < 0) throw DomainError("Peclet number requires an interior edge");
    const Eigen::Vector2d v = edge_average_velocity(mesh, edge, spec);
    const Eigen::Vector2d n = mesh.normal(cell, edge);
    const double dist = (mesh.cells[cell].center - mesh.cells[other].center).norm();
    const double denom = std::min(normal_diffusivity(mesh, spec, cell, edge),
                                  normal_diffusivity(mesh, spec, other, edge));
    return {dist * v.dot(n) / denom, PecletVariant::Grid};
}

PecletNumber peclet(const CartesianMesh& mesh, int edge, int cell, const ProblemSpec& spec,
                    PecletVariant variant) {
    return variant == PecletVariant::Eigen ? peclet_eigen(mesh, edge, cell, spec)
                                           : peclet_grid(mesh, edge, cell, spec);
}

} // namespace cfhmm
