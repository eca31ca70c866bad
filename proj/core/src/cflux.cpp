#include "cfhmm/cflux.hpp"

#include <cmath>

namespace cfhmm {

double z_function(double peclet, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw DomainError("alpha must lie in [0, 1]");
    const double p = peclet;
    if (std::abs(p) < 1e-4) {
        return alpha * alpha / 2.0 + (alpha * alpha * alpha / 6.0 - alpha * alpha / 4.0) * p;
    }
    if (p > 500.0) return 0.0;
    if (p < -500.0) return alpha + 1.0 / p;
    return (std::expm1(alpha * p) - alpha * p) / (p * std::expm1(p));
}

void LinearForm::scaled_accumulate(double factor, const LinearForm& other) {
    constant += factor * other.constant;
    for (const auto& [dof, value] : other.coeffs) {
        bool merged = false;
        for (auto& [d, v] : coeffs) {
            if (d == dof) {
                v += factor * value;
                merged = true;
                break;
            }
        }
        if (!merged) coeffs.emplace_back(dof, factor * value);
    }
}

double LinearForm::evaluate(const Eigen::VectorXd& u) const {
    double r = constant;
    for (const auto& [dof, value] : coeffs) r += value * u[dof];
    return r;
}

namespace {

struct EdgeGeometryCF {
    double dist;     // |x_K - x_L|
    double alpha;    // scaled coordinate from side K
    double d_k, d_l; // |x_K - x_sigma|, |x_L - x_sigma|
};

EdgeGeometryCF cf_geometry(const CartesianMesh& mesh, int edge) {
    const Edge& e = mesh.edges[edge];
    if (!e.interior()) throw DomainError("inhomogeneous flux is defined on interior edges only");
    const Eigen::Vector2d xk = mesh.cells[e.cell_k].center;
    const Eigen::Vector2d xl = mesh.cells[e.cell_l].center;
    const double dist = (xk - xl).norm();
    if (dist == 0.0) throw DegenerateSegment("coincident cell centers");
    // x_sigma is the intersection of [x_K, x_L] with sigma; on an
    // axis-aligned edge only the normal-axis coordinate matters.
    const int ax = e.axis;
    const double alpha = (e.midpoint[ax] - xk[ax]) / (xl[ax] - xk[ax]);
    return {dist, alpha, alpha * dist, (1.0 - alpha) * dist};
}

// Homogeneous flux through a cross edge of sub-region C', scaled per the
// Cartesian first-order approximation. `z_term` carries the Z weight and
// the side sign.
void accumulate_cross_edge(LinearForm& out, const CartesianMesh& mesh,
                           const ProblemSpec& spec, int cell, int cross_edge,
                           double factor, const HomogeneousFluxForms& forms) {
    const Edge& ce = mesh.edges[cross_edge];
    if (!ce.interior() && spec.boundary_kind[cross_edge] == BcKind::Neumann) {
        // Prescribed flux: (d_C / |sigma_N|) * (-h |sigma_N|), premultiplied
        // by factor = sign * dist * Z / d_C * (d_C / |sigma_N|) below.
        out.constant += factor * (-spec.neumann(ce.midpoint) * ce.length);
        return;
    }
    const int side = mesh.side_of(cell, cross_edge);
    const LocalFluxCoeffs& f = forms.full[cell];
    LinearForm local;
    local.add(mesh.dof_of_cell(cell), f(side, 0));
    for (int j = 0; j < 4; ++j)
        local.add(mesh.dof_of_edge(mesh.cells[cell].edge[j]), f(side, 1 + j));
    out.scaled_accumulate(factor, local);
}

} // namespace

double alpha_coordinate(const CartesianMesh& mesh, int edge) {
    return cf_geometry(mesh, edge).alpha;
}

double source_flux(const CartesianMesh& mesh, int edge, double peclet, double alpha,
                   double source_k, double source_l) {
    const Edge& e = mesh.edges[edge];
    const EdgeGeometryCF g = cf_geometry(mesh, edge);
    // |K'_sigma| = |sigma| |x_K - x_sigma|, so the distance ratios collapse:
    // (dist / d_K) Z |K'| s_K = dist |sigma| Z s_K (and likewise for L).
    return (g.dist * e.length) *
           (z_function(-peclet, 1.0 - alpha) * source_k - z_function(peclet, alpha) * source_l);
}

LinearForm cross_flux(const CartesianMesh& mesh, const ProblemSpec& spec, int edge,
                      double peclet, double alpha, const HomogeneousFluxForms& forms) {
    const Edge& e = mesh.edges[edge];
    const EdgeGeometryCF g = cf_geometry(mesh, edge);
    const double z_k = z_function(-peclet, 1.0 - alpha);
    const double z_l = z_function(peclet, alpha);

    LinearForm out;
    for (int ce : mesh.cross_edges(e.cell_k, edge)) {
        // (dist / d_K) Z (d_K / |sigma_N|) = dist Z / |sigma_N|
        accumulate_cross_edge(out, mesh, spec, e.cell_k, ce,
                              g.dist * z_k / mesh.edges[ce].length, forms);
    }
    for (int ce : mesh.cross_edges(e.cell_l, edge)) {
        accumulate_cross_edge(out, mesh, spec, e.cell_l, ce,
                              -g.dist * z_l / mesh.edges[ce].length, forms);
    }
    return out;
}

std::vector<std::optional<InhomogeneousContribution>> inhomogeneous_contributions(
    const CartesianMesh& mesh, const ProblemSpec& spec, PecletVariant peclet_variant,
    const HomogeneousFluxForms& forms) {
    std::vector<std::optional<InhomogeneousContribution>> out(mesh.n_edges());
    for (int edge : mesh.interior_edges) {
        const Edge& e = mesh.edges[edge];
        const double p = peclet(mesh, edge, e.cell_k, spec, peclet_variant).value;
        const double alpha = alpha_coordinate(mesh, edge);
        const double fis = source_flux(mesh, edge, p, alpha,
                                       cell_source(mesh, e.cell_k, spec),
                                       cell_source(mesh, e.cell_l, spec));
        LinearForm fic = cross_flux(mesh, spec, edge, p, alpha, forms);

        InhomogeneousContribution contrib;
        contrib.rhs_term = fis - fic.constant;  // F^I = F^{I,s} - F^{I,c}
        contrib.matrix_terms.coeffs.reserve(fic.coeffs.size());
        for (const auto& [dof, value] : fic.coeffs)
            contrib.matrix_terms.add(dof, -value);
        out[edge] = std::move(contrib);
    }
    return out;
}

} // namespace cfhmm
