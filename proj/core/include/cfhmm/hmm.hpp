#ifndef CFHMM_HMM_HPP
#define CFHMM_HMM_HPP

#include <array>

#include <Eigen/Dense>

#include "cfhmm/mesh.hpp"

namespace cfhmm {

/// Piecewise-constant stabilized gradient of a hybrid function on the four
/// sub-cells of K, plus the linearly exact cell-mean gradient.
struct DiscreteGradient {
    Eigen::Vector2d mean;
    std::array<Eigen::Vector2d, 4> sub;  // indexed by Side
};

DiscreteGradient discrete_gradient(const CartesianMesh& mesh, int cell, double w_cell,
                                   const std::array<double, 4>& w_edge);

/// Local diffusive flux matrix: F^D_{K,sigma_i} = sum_j W(i,j) (c_K - c_{sigma_j}).
/// W is the Gram matrix of the local bilinear form and is symmetric positive
/// definite.
struct LocalDiffusionMatrix {
    int cell;
    Eigen::Matrix4d W;
};

LocalDiffusionMatrix local_diffusion_matrix(const CartesianMesh& mesh, int cell,
                                            const Eigen::Matrix2d& lam);

} // namespace cfhmm

#endif
