#ifndef CFHMM_TRANSPORT_HPP
#define CFHMM_TRANSPORT_HPP

#include <Eigen/Dense>

#include "cfhmm/mesh.hpp"
#include "cfhmm/problem.hpp"

namespace cfhmm {

/// A_sg(t) = -t/(e^{-t} - 1) - 1, with series and asymptotic branches.
/// Nonnegative and monotone increasing on the real line; satisfies
/// A_sg(t) - A_sg(-t) = t.
double a_sg(double t);

enum class LambdaVariant { Eigenvalue, Grid };
enum class PecletVariant { Eigen, Grid };

/// Scaling factor for the advective flux. Eigenvalue variant: min over 1
/// and the eigenvalues of the adjacent tensors. Grid variant: min over 1
/// and the normal diffusivities n^T Lam n of the adjacent cells.
double lambda_sigma(const CartesianMesh& mesh, int edge, const ProblemSpec& spec,
                    LambdaVariant variant);

/// F^A_{K,sigma} = coeff_cell * c_K + coeff_edge * c_sigma.
struct AdvectiveFluxCoeffs {
    double coeff_cell;
    double coeff_edge;
};

AdvectiveFluxCoeffs advective_flux_coeffs(const CartesianMesh& mesh, int cell, int edge,
                                          const ProblemSpec& spec, LambdaVariant variant);

struct PecletNumber {
    double value;
    PecletVariant variant;
};

/// Eigenvector-based Peclet number: |x_K - x_L| (Lam_K^{-1} V_sigma) . n_{K,sigma}.
PecletNumber peclet_eigen(const CartesianMesh& mesh, int edge, int cell,
                          const ProblemSpec& spec);

/// Grid-based Peclet number:
/// |x_K - x_L| (V_sigma . n_{K,sigma}) / min(n^T Lam_K n, n^T Lam_L n).
PecletNumber peclet_grid(const CartesianMesh& mesh, int edge, int cell,
                         const ProblemSpec& spec);

PecletNumber peclet(const CartesianMesh& mesh, int edge, int cell, const ProblemSpec& spec,
                    PecletVariant variant);

} // namespace cfhmm

#endif
