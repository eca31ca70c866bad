#include "cfhmm/flux_forms.hpp"

namespace cfhmm {

HomogeneousFluxForms homogeneous_flux_forms(const CartesianMesh& mesh,
                                            const ProblemSpec& spec,
                                            LambdaVariant lambda_variant) {
    HomogeneousFluxForms forms;
    forms.diffusive.resize(mesh.cells.size());
    forms.full.resize(mesh.cells.size());

    for (int k = 0; k < mesh.n_cells(); ++k) {
        const LocalDiffusionMatrix ldm = local_diffusion_matrix(mesh, k, spec.diffusion[k]);
        LocalFluxCoeffs diff = LocalFluxCoeffs::Zero();
        for (int i = 0; i < 4; ++i) {
            // F^D_{K,sigma_i} = sum_j W(i,j) (c_K - c_{sigma_j})
            for (int j = 0; j < 4; ++j) {
                diff(i, 0) += ldm.W(i, j);
                diff(i, 1 + j) -= ldm.W(i, j);
            }
        }
        LocalFluxCoeffs full = diff;
        for (int i = 0; i < 4; ++i) {
            const AdvectiveFluxCoeffs adv =
                advective_flux_coeffs(mesh, k, mesh.cells[k].edge[i], spec, lambda_variant);
            full(i, 0) += adv.coeff_cell;
            full(i, 1 + i) += adv.coeff_edge;
        }
        forms.diffusive[k] = diff;
        forms.full[k] = full;
    }
    return forms;
}

double evaluate_local_flux(const CartesianMesh& mesh, int cell, int side,
                           const LocalFluxCoeffs& coeffs, const Eigen::VectorXd& u) {
    const Cell& c = mesh.cells[cell];
    double f = coeffs(side, 0) * u[mesh.dof_of_cell(cell)];
    for (int j = 0; j < 4; ++j) f += coeffs(side, 1 + j) * u[mesh.dof_of_edge(c.edge[j])];
    return f;
}

} // namespace cfhmm
