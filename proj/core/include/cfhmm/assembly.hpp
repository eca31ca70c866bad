#ifndef CFHMM_ASSEMBLY_HPP
#define CFHMM_ASSEMBLY_HPP

#include <vector>

#include <Eigen/Sparse>

#include "cfhmm/cflux.hpp"

namespace cfhmm {

enum class Scheme { HF, CF };

enum class RowKind { CellBalance, EdgeConservation, Dirichlet, Neumann, MeanConstraint };

/// Global sparse system over the hybrid unknowns (one per active cell,
/// then one per edge). All-Neumann problems carry one extra bordered
/// row/column for the mean constraint (Lagrange multiplier).
struct SparseSystem {
    Eigen::SparseMatrix<double> matrix;
    Eigen::VectorXd rhs;
    std::vector<RowKind> row_kind;
    int n_cells = 0;
    int n_edges = 0;
    bool mean_constrained = false;
};

SparseSystem assemble(const CartesianMesh& mesh, const ProblemSpec& spec, Scheme scheme,
                      PecletVariant peclet_variant, LambdaVariant lambda_variant);

struct SolverStats {
    double relative_residual = 0.0;
    int refinement_steps = 0;
};

struct Solution {
    Eigen::VectorXd values;  // cells first, then edges (and the multiplier, if any)
    int n_cells = 0;
    int n_edges = 0;
    SolverStats stats;

    double cell_value(int k) const { return values[k]; }
    double edge_value(int e) const { return values[n_cells + e]; }
};

/// Direct sparse factorization; deterministic for fixed inputs. Throws
/// SingularSystem on factorization failure and SolverBreakdown when the
/// relative residual cannot be brought below the tolerance.
Solution solve(const SparseSystem& system, double tolerance = 1e-10);

} // namespace cfhmm

#endif
