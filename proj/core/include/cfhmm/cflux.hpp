#ifndef CFHMM_CFLUX_HPP
#define CFHMM_CFLUX_HPP

#include <utility>
#include <vector>

#include "cfhmm/flux_forms.hpp"

namespace cfhmm {

/// Z(P, alpha) = (e^{alpha P} - 1 - alpha P) / (P (e^P - 1)), the weight of
/// the source contributions in the inhomogeneous flux. Stable for all P;
/// requires alpha in [0, 1]. Z(P, alpha) lies in [0, alpha] and decreases
/// in P.
double z_function(double peclet, double alpha);

/// Scaled coordinate of the flux point along the segment [x_K, x_L]:
/// x_sigma = (1 - alpha) x_K + alpha x_L, measured from the canonical side
/// (edge.cell_k).
double alpha_coordinate(const CartesianMesh& mesh, int edge);

/// Source flux F^{I,s}_{K,sigma} for piecewise-constant sources. K is the
/// canonical side of the edge.
double source_flux(const CartesianMesh& mesh, int edge, double peclet, double alpha,
                   double source_k, double source_l);

/// Sparse linear form over global unknowns with a constant offset.
struct LinearForm {
    std::vector<std::pair<int, double>> coeffs;
    double constant = 0.0;

    void add(int dof, double value) { coeffs.emplace_back(dof, value); }
    void scaled_accumulate(double factor, const LinearForm& other);
    double evaluate(const Eigen::VectorXd& u) const;
};

/// Cross-flux F^{I,c}_{K,sigma}: the transverse homogeneous fluxes of the
/// rectangular sub-regions, expanded into a linear form over the cell and
/// edge unknowns of K and L. Neumann cross edges contribute a constant.
LinearForm cross_flux(const CartesianMesh& mesh, const ProblemSpec& spec, int edge,
                      double peclet, double alpha, const HomogeneousFluxForms& forms);

/// Inhomogeneous flux F^I_{K,sigma} = F^{I,s} - F^{I,c} for the canonical
/// side K of an interior edge; the flux seen from L is the exact negation.
struct InhomogeneousContribution {
    double rhs_term = 0.0;   // constant part of F^I
    LinearForm matrix_terms; // linear part of F^I (constant member unused)
};

/// One contribution per edge; boundary edges carry no contribution.
std::vector<std::optional<InhomogeneousContribution>> inhomogeneous_contributions(
    const CartesianMesh& mesh, const ProblemSpec& spec, PecletVariant peclet_variant,
    const HomogeneousFluxForms& forms);

} // namespace cfhmm

#endif
