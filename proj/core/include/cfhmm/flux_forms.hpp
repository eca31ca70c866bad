#ifndef CFHMM_FLUX_FORMS_HPP
#define CFHMM_FLUX_FORMS_HPP

#include <vector>

#include <Eigen/Dense>

#include "cfhmm/hmm.hpp"
#include "cfhmm/transport.hpp"

namespace cfhmm {

/// Per-cell local flux coefficients. Row i gives the flux through local
/// edge i as a linear form over (c_K, c_{sigma_0}, ..., c_{sigma_3}):
/// column 0 multiplies the cell unknown, column 1+j the j-th edge unknown.
using LocalFluxCoeffs = Eigen::Matrix<double, 4, 5>;

struct HomogeneousFluxForms {
    std::vector<LocalFluxCoeffs> diffusive;  // F^D only (used by Neumann rows)
    std::vector<LocalFluxCoeffs> full;       // F^H = F^D + F^A
};

HomogeneousFluxForms homogeneous_flux_forms(const CartesianMesh& mesh,
                                            const ProblemSpec& spec,
                                            LambdaVariant lambda_variant);

/// Evaluate the flux through local edge `side` of `cell` at a global
/// unknown vector.
double evaluate_local_flux(const CartesianMesh& mesh, int cell, int side,
                           const LocalFluxCoeffs& coeffs, const Eigen::VectorXd& u);

} // namespace cfhmm

#endif
