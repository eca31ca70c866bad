#ifndef CFHMM_PROBLEM_HPP
#define CFHMM_PROBLEM_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cfhmm/mesh.hpp"

namespace cfhmm {

enum class BcKind { Dirichlet, Neumann };

using ScalarField = std::function<double(const Eigen::Vector2d&)>;
using VectorField = std::function<Eigen::Vector2d(const Eigen::Vector2d&)>;

/// Closed-form symmetric 2x2 eigendecomposition, lambda1 <= lambda2.
struct EigenPair2x2 {
    double lambda1, lambda2;
    Eigen::Vector2d u1, u2;  // orthonormal
};

EigenPair2x2 eigen_2x2(const Eigen::Matrix2d& t);

/// Problem data for the stationary advection-diffusion equation
///   div(c V - Lam grad c) = s,  c = g on the Dirichlet part,
///   Lam grad c . n = h on the Neumann part.
/// The diffusion tensor is piecewise constant per active cell.
struct ProblemSpec {
    std::vector<Eigen::Matrix2d> diffusion;  // per active cell
    VectorField velocity;
    ScalarField source;
    ScalarField dirichlet;  // g, evaluated at boundary edge midpoints
    ScalarField neumann;    // h
    std::vector<BcKind> boundary_kind;  // per edge; meaningful on boundary edges
    std::optional<double> mean_value;   // required when every boundary edge is Neumann
    ScalarField exact;                  // may be empty

    bool has_exact() const { return static_cast<bool>(exact); }
    bool all_neumann(const CartesianMesh& mesh) const;
};

enum class CaseId { tc1, tc2, tc3, tc4, tc5 };
enum class RotationVariant { ccw, cw };

CaseId parse_case_id(const std::string& name);

/// Built-in catalog: three manufactured convergence cases on the unit
/// square, the heterogeneous rotating-velocity case, and the holed-domain
/// monotonicity case.
std::pair<CartesianMesh, ProblemSpec> builtin_case(CaseId id,
                                                   std::optional<RotationVariant> variant,
                                                   int nx);

/// (1/|sigma|) int_sigma V . n_{K,sigma}, 2-point Gauss along the edge.
double edge_normal_velocity(const CartesianMesh& mesh, int edge, int cell,
                            const ProblemSpec& spec);

/// Edge-average velocity vector (same quadrature, per component).
Eigen::Vector2d edge_average_velocity(const CartesianMesh& mesh, int edge,
                                      const ProblemSpec& spec);

/// s_K: cell-center evaluation of the source.
double cell_source(const CartesianMesh& mesh, int cell, const ProblemSpec& spec);

} // namespace cfhmm

#endif
