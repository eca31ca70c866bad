#include "cfhmm/assembly.hpp"

#include <Eigen/SparseLU>

namespace cfhmm {

SparseSystem assemble(const CartesianMesh& mesh, const ProblemSpec& spec, Scheme scheme,
                      PecletVariant peclet_variant, LambdaVariant lambda_variant) {
    const HomogeneousFluxForms forms = homogeneous_flux_forms(mesh, spec, lambda_variant);

    std::vector<std::optional<InhomogeneousContribution>> inhomog;
    if (scheme == Scheme::CF)
        inhomog = inhomogeneous_contributions(mesh, spec, peclet_variant, forms);

    const bool all_neumann = spec.all_neumann(mesh);
    if (all_neumann && !spec.mean_value)
        throw MissingMeanValue("all-Neumann problem requires a prescribed mean value");

    const int n = mesh.n_unknowns();
    const int size = n + (all_neumann ? 1 : 0);

    SparseSystem sys;
    sys.n_cells = mesh.n_cells();
    sys.n_edges = mesh.n_edges();
    sys.mean_constrained = all_neumann;
    sys.rhs = Eigen::VectorXd::Zero(size);
    sys.row_kind.resize(size);

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(mesh.n_cells()) * 24 + mesh.n_edges() * 10);

    // Cell balance rows: sum_sigma F^H (+ F^I for CF) = s_K |K|.
    for (int k = 0; k < mesh.n_cells(); ++k) {
        const int row = mesh.dof_of_cell(k);
        sys.row_kind[row] = RowKind::CellBalance;
        const Cell& c = mesh.cells[k];
        const LocalFluxCoeffs& f = forms.full[k];
        double diag = 0.0;
        std::array<double, 4> edge_coeff{0.0, 0.0, 0.0, 0.0};
        for (int i = 0; i < 4; ++i) {
            diag += f(i, 0);
            for (int j = 0; j < 4; ++j) edge_coeff[j] += f(i, 1 + j);
        }
        trip.emplace_back(row, row, diag);
        for (int j = 0; j < 4; ++j) trip.emplace_back(row, mesh.dof_of_edge(c.edge[j]), edge_coeff[j]);
        sys.rhs[row] = cell_source(mesh, k, spec) * c.area;

        if (scheme == Scheme::CF) {
            for (int i = 0; i < 4; ++i) {
                const int edge = c.edge[i];
                if (!inhomog[edge]) continue;
                const InhomogeneousContribution& ic = *inhomog[edge];
                // Contributions are stored for the canonical side (cell_k);
                // the opposite side is the exact negation (conservativity).
                const double sign = (mesh.edges[edge].cell_k == k) ? 1.0 : -1.0;
                for (const auto& [dof, value] : ic.matrix_terms.coeffs)
                    trip.emplace_back(row, dof, sign * value);
                sys.rhs[row] -= sign * ic.rhs_term;
            }
        }
    }

    // Edge rows: conservation for interior edges, boundary conditions else.
    for (int e = 0; e < mesh.n_edges(); ++e) {
        const int row = mesh.dof_of_edge(e);
        const Edge& edge = mesh.edges[e];
        if (edge.interior()) {
            sys.row_kind[row] = RowKind::EdgeConservation;
            // F^H_{K,sigma} + F^H_{L,sigma} = 0; per the conservativity of
            // the inhomogeneous fluxes this row is identical under CF.
            for (int cell : {edge.cell_k, edge.cell_l}) {
                const int side = mesh.side_of(cell, e);
                const LocalFluxCoeffs& f = forms.full[cell];
                trip.emplace_back(row, mesh.dof_of_cell(cell), f(side, 0));
                for (int j = 0; j < 4; ++j)
                    trip.emplace_back(row, mesh.dof_of_edge(mesh.cells[cell].edge[j]),
                                      f(side, 1 + j));
            }
        } else if (spec.boundary_kind[e] == BcKind::Dirichlet) {
            sys.row_kind[row] = RowKind::Dirichlet;
            trip.emplace_back(row, row, 1.0);
            sys.rhs[row] = spec.dirichlet(edge.midpoint);
        } else {
            sys.row_kind[row] = RowKind::Neumann;
            const int cell = edge.boundary_cell();
            const int side = mesh.side_of(cell, e);
            const LocalFluxCoeffs& f = forms.diffusive[cell];
            trip.emplace_back(row, mesh.dof_of_cell(cell), f(side, 0));
            for (int j = 0; j < 4; ++j)
                trip.emplace_back(row, mesh.dof_of_edge(mesh.cells[cell].edge[j]), f(side, 1 + j));
            sys.rhs[row] = -spec.neumann(edge.midpoint) * edge.length;
        }
    }

    if (all_neumann) {
        const int row = n;
        sys.row_kind[row] = RowKind::MeanConstraint;
        const double total = mesh.active_area();
        for (int k = 0; k < mesh.n_cells(); ++k) {
            const double w = mesh.cells[k].area / total;
            trip.emplace_back(row, mesh.dof_of_cell(k), w);
            trip.emplace_back(mesh.dof_of_cell(k), row, w);
        }
        sys.rhs[row] = *spec.mean_value;
    }

    sys.matrix.resize(size, size);
    sys.matrix.setFromTriplets(trip.begin(), trip.end());
    sys.matrix.makeCompressed();
    return sys;
}

Solution solve(const SparseSystem& system, double tolerance) {
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.analyzePattern(system.matrix);
    lu.factorize(system.matrix);
    if (lu.info() != Eigen::Success) throw SingularSystem("sparse LU factorization failed");

    Solution sol;
    sol.n_cells = system.n_cells;
    sol.n_edges = system.n_edges;
    sol.values = lu.solve(system.rhs);

    const double rhs_norm = system.rhs.norm();
    auto residual = [&]() {
        const double r = (system.matrix * sol.values - system.rhs).norm();
        return rhs_norm > 0.0 ? r / rhs_norm : r;
    };
    sol.stats.relative_residual = residual();
    // A couple of iterative refinement sweeps with the existing factors.
    while (sol.stats.relative_residual > tolerance && sol.stats.refinement_steps < 3) {
        const Eigen::VectorXd r = system.rhs - system.matrix * sol.values;
        sol.values += lu.solve(r);
        ++sol.stats.refinement_steps;
        sol.stats.relative_residual = residual();
    }
    if (!(sol.stats.relative_residual <= tolerance))
        throw SolverBreakdown("relative residual " + std::to_string(sol.stats.relative_residual) +
                              " above tolerance");
    return sol;
}

} // namespace cfhmm
