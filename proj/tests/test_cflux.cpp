#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include <doctest.h>

#include "cfhmm/cf1d.hpp"
#include "cfhmm/cflux.hpp"

using namespace cfhmm;

namespace {

ProblemSpec make_spec(const CartesianMesh& mesh, const Eigen::Matrix2d& lam,
                      const Eigen::Vector2d& v, ScalarField source) {
    ProblemSpec spec;
    spec.diffusion.assign(mesh.cells.size(), lam);
    spec.velocity = [v](const Eigen::Vector2d&) { return v; };
    spec.source = std::move(source);
    spec.dirichlet = [](const Eigen::Vector2d&) { return 0.0; };
    spec.neumann = [](const Eigen::Vector2d&) { return 0.0; };
    spec.boundary_kind.assign(mesh.edges.size(), BcKind::Dirichlet);
    return spec;
}

std::map<int, double> coeff_map(const LinearForm& f) {
    std::map<int, double> m;
    for (const auto& [dof, v] : f.coeffs) m[dof] += v;
    return m;
}

// Direct evaluation of the inhomogeneous flux seen from `cell` (either side
// of the interior edge), written out from the defining formula rather than
// relying on the canonical-side storage. Used to verify conservativity.
LinearForm side_cross_flux(const CartesianMesh& mesh, const ProblemSpec& spec, int edge,
                           int cell, double p_from_cell, const HomogeneousFluxForms& forms) {
    const Edge& e = mesh.edges[edge];
    const int other = mesh.opposite_cell(edge, cell);
    const double dist = (mesh.cells[cell].center - mesh.cells[other].center).norm();
    // Scaled coordinate measured from `cell`.
    const int ax = e.axis;
    const double a = (e.midpoint[ax] - mesh.cells[cell].center[ax]) /
                     (mesh.cells[other].center[ax] - mesh.cells[cell].center[ax]);
    const double z_near = z_function(-p_from_cell, 1.0 - a);
    const double z_far = z_function(p_from_cell, a);

    LinearForm out;
    auto add_side = [&](int c, double weight) {
        for (int ce : mesh.cross_edges(c, edge)) {
            const Edge& cedge = mesh.edges[ce];
            const double factor = weight / cedge.length;
            if (!cedge.interior() && spec.boundary_kind[ce] == BcKind::Neumann) {
                out.constant += factor * (-spec.neumann(cedge.midpoint) * cedge.length);
                continue;
            }
            const int side = mesh.side_of(c, ce);
            const LocalFluxCoeffs& f = forms.full[c];
            LinearForm local;
            local.add(mesh.dof_of_cell(c), f(side, 0));
            for (int j = 0; j < 4; ++j)
                local.add(mesh.dof_of_edge(mesh.cells[c].edge[j]), f(side, 1 + j));
            out.scaled_accumulate(factor, local);
        }
    };
    add_side(cell, dist * z_near);
    add_side(other, -dist * z_far);
    return out;
}

}  // namespace

TEST_SUITE("cflux") {

TEST_CASE("Z-function frozen reference values") {
    CHECK(z_function(1e-12, 0.5) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(z_function(0.0, 0.5) == 0.125);
    CHECK(z_function(5.0, 0.0) == 0.0);
    CHECK(z_function(-3.0, 0.0) == 0.0);
    CHECK(z_function(1.0, 0.5) == doctest::Approx(0.086552315363482223).epsilon(1e-10));
    CHECK(z_function(-1.0, 0.5) == doctest::Approx(0.16852902223280865).epsilon(1e-10));
    CHECK(z_function(1e-5, 0.3) == doctest::Approx(0.044999820000183750).epsilon(1e-10));
    CHECK(z_function(2.5, 0.3) == doctest::Approx(0.013127662501848103).epsilon(1e-10));
    CHECK(z_function(-2.5, 0.3) == doctest::Approx(0.096900716257018014).epsilon(1e-10));
    CHECK(z_function(1.0, 0.25) == doctest::Approx(0.019801999953788413).epsilon(1e-10));
    CHECK(z_function(-1.0, 0.75) == doctest::Approx(0.35177870682311484).epsilon(1e-10));
}

TEST_CASE("Z-function limits and bounds") {
    // Z -> 0 as P -> +inf; Z -> alpha + 1/P as P -> -inf.
    CHECK(z_function(480.0, 0.7) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(z_function(600.0, 0.7) == 0.0);
    CHECK(z_function(-480.0, 0.7) == doctest::Approx(0.69791666666666667).epsilon(1e-9));
    CHECK(z_function(-600.0, 0.7) == doctest::Approx(0.7 - 1.0 / 600.0).epsilon(1e-12));
    for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        double prev = z_function(-120.0, a);
        for (int i = 1; i <= 2000; ++i) {
            const double p = -120.0 + 240.0 * i / 2000.0;
            const double z = z_function(p, a);
            CHECK(z >= 0.0);
            CHECK(z <= a + 1e-15);
            CHECK(z <= prev + 1e-12);  // monotone decreasing in P
            prev = z;
        }
    }
}

TEST_CASE("Z-function rejects out-of-range alpha") {
    CHECK_THROWS_AS(z_function(1.0, -0.1), DomainError);
    CHECK_THROWS_AS(z_function(1.0, 1.1), DomainError);
}

TEST_CASE("alpha coordinate is the interpolation weight of the flux point") {
    // Uniform Cartesian neighbors place the edge exactly halfway.
    const CartesianMesh m = build_mesh(4, 4, Rect{});
    for (int e : m.interior_edges) {
        const double a = alpha_coordinate(m, e);
        CHECK(a == doctest::Approx(0.5).epsilon(1e-14));
        // x_sigma = (1 - alpha) x_K + alpha x_L on the normal axis.
        const Edge& edge = m.edges[e];
        const int ax = edge.axis;
        const double xk = m.cells[edge.cell_k].center[ax];
        const double xl = m.cells[edge.cell_l].center[ax];
        CHECK((1.0 - a) * xk + a * xl == doctest::Approx(edge.midpoint[ax]).epsilon(1e-14));
    }
}

TEST_CASE("source flux vanishes for zero sources and cancels symmetrically") {
    const CartesianMesh m = build_mesh(4, 4, Rect{});
    const int e = m.interior_edges.front();
    CHECK(source_flux(m, e, 1.3, 0.5, 0.0, 0.0) == 0.0);
    // P = 0, alpha = 1/2, s_K = s_L: Z(0,1/2) s - Z(0,1/2) s = 0.
    CHECK(source_flux(m, e, 0.0, 0.5, 2.7, 2.7) == 0.0);
}

TEST_CASE("source flux matches the 1D inhomogeneous flux bit for bit") {
    // On a unit-height mesh |sigma| = 1 and |x_K - x_L| = dx, so the 2D
    // source flux must agree exactly with the 1D formula.
    const CartesianMesh m = build_mesh(4, 1, Rect{0.0, 0.0, 4.0, 1.0});
    for (int e : m.interior_edges) {
        for (double p : {0.0, 0.3, -4.1, 27.0}) {
            const double f2d = source_flux(m, e, p, 0.5, 1.7, -0.9);
            const double f1d = inhomogeneous_flux_1d(1.7, -0.9, p, 0.5, 1.0);
            CHECK(f2d == f1d);  // bitwise
        }
    }
}

TEST_CASE("hand-evaluated inhomogeneous flux on a 2x1 mesh") {
    // Two unit cells, V = 0, Lam = I, s constant = 3. The only interior
    // edge has P = 0, alpha = 1/2; the source flux cancels and the cross
    // flux couples the transverse homogeneous fluxes with weight
    // dist * Z(0, 1/2) / |sigma_N| = 1 * (1/8) / 1 = 1/8.
    const CartesianMesh m = build_mesh(2, 1, Rect{0.0, 0.0, 2.0, 1.0});
    const ProblemSpec spec = make_spec(m, Eigen::Matrix2d::Identity(), {0.0, 0.0},
                                       [](const Eigen::Vector2d&) { return 3.0; });
    const HomogeneousFluxForms forms = homogeneous_flux_forms(m, spec, LambdaVariant::Grid);
    const auto inhomog = inhomogeneous_contributions(m, spec, PecletVariant::Grid, forms);

    const int e = m.interior_edges.front();
    REQUIRE(inhomog[e].has_value());
    CHECK(inhomog[e]->rhs_term == 0.0);

    // Assemble the expected linear form by hand: (1/8)(F^H_{K,N} + F^H_{K,S})
    // - (1/8)(F^H_{L,N} + F^H_{L,S}), negated (F^I = F^{I,s} - F^{I,c}).
    LinearForm expected;
    const Edge& edge = m.edges[e];
    for (int c : {edge.cell_k, edge.cell_l}) {
        const double sign = (c == edge.cell_k) ? -1.0 : 1.0;  // negated cross flux
        for (int ce : m.cross_edges(c, e)) {
            const int side = m.side_of(c, ce);
            const LocalFluxCoeffs& f = forms.full[c];
            LinearForm local;
            local.add(m.dof_of_cell(c), f(side, 0));
            for (int j = 0; j < 4; ++j)
                local.add(m.dof_of_edge(m.cells[c].edge[j]), f(side, 1 + j));
            expected.scaled_accumulate(sign * 0.125, local);
        }
    }
    const auto got = coeff_map(inhomog[e]->matrix_terms);
    const auto want = coeff_map(expected);
    REQUIRE(got.size() == want.size());
    for (const auto& [dof, v] : want) {
        REQUIRE(got.count(dof) == 1);
        CHECK(got.at(dof) == doctest::Approx(v).epsilon(1e-14));
    }
}

TEST_CASE("conservativity of the inhomogeneous flux (Lemma 3.2)") {
    // Evaluate the flux independently from both sides of every interior
    // edge of a 4x4 mesh with randomized data and check exact negation at
    // the coefficient level.
    const CartesianMesh m = build_mesh(4, 4, Rect{});
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    Eigen::Matrix2d lam;
    lam << 1.3, 0.4, 0.4, 0.9;
    const ProblemSpec spec = make_spec(m, lam, {0.8, -1.4}, [&](const Eigen::Vector2d& p) {
        return std::sin(3.0 * p.x()) + std::cos(2.0 * p.y());
    });
    const HomogeneousFluxForms forms = homogeneous_flux_forms(m, spec, LambdaVariant::Grid);

    for (int e : m.interior_edges) {
        const Edge& edge = m.edges[e];
        const double pk = peclet(m, e, edge.cell_k, spec, PecletVariant::Grid).value;
        const double pl = peclet(m, e, edge.cell_l, spec, PecletVariant::Grid).value;

        // Source fluxes: side K with (P, alpha, s_K, s_L) vs side L with
        // (-P, 1-alpha, s_L, s_K) via the same formula.
        const double a = alpha_coordinate(m, e);
        const double sk = cell_source(m, edge.cell_k, spec);
        const double sl = cell_source(m, edge.cell_l, spec);
        const double dist = (m.cells[edge.cell_k].center - m.cells[edge.cell_l].center).norm();
        const double len = m.edges[e].length;
        const double from_k = source_flux(m, e, pk, a, sk, sl);
        const double from_l =
            dist * len * (z_function(-pl, 1.0 - (1.0 - a)) * sl - z_function(pl, 1.0 - a) * sk);
        CHECK(std::abs(from_k + from_l) <= 1e-13 * (1.0 + std::abs(from_k)));

        // Cross fluxes from both sides.
        const auto ck = coeff_map(side_cross_flux(m, spec, e, edge.cell_k, pk, forms));
        const auto cl = coeff_map(side_cross_flux(m, spec, e, edge.cell_l, pl, forms));
        REQUIRE(ck.size() == cl.size());
        for (const auto& [dof, v] : ck) {
            REQUIRE(cl.count(dof) == 1);
            CHECK(std::abs(v + cl.at(dof)) <= 1e-13 * (1.0 + std::abs(v)));
        }

        // And the library's canonical-side cross flux matches the side-K oracle.
        const auto lib = coeff_map(cross_flux(m, spec, e, pk, a, forms));
        for (const auto& [dof, v] : ck) CHECK(lib.at(dof) == doctest::Approx(v).epsilon(1e-13));
    }
}

TEST_CASE("boundary edges carry no contribution; zero source keeps rhs empty") {
    const CartesianMesh m = build_mesh(3, 3, Rect{});
    const ProblemSpec spec = make_spec(m, Eigen::Matrix2d::Identity(), {0.4, 0.2},
                                       [](const Eigen::Vector2d&) { return 0.0; });
    const HomogeneousFluxForms forms = homogeneous_flux_forms(m, spec, LambdaVariant::Grid);
    const auto inhomog = inhomogeneous_contributions(m, spec, PecletVariant::Grid, forms);
    for (int e = 0; e < m.n_edges(); ++e) {
        if (m.edges[e].interior()) {
            REQUIRE(inhomog[e].has_value());
            CHECK(inhomog[e]->rhs_term == 0.0);
            CHECK(!inhomog[e]->matrix_terms.coeffs.empty());
        } else {
            CHECK(!inhomog[e].has_value());
        }
    }
}

TEST_CASE("constant fields produce zero cross flux") {
    // With V = 0 and a constant hybrid state, every homogeneous flux is
    // zero, so the cross-flux form must evaluate to zero.
    const CartesianMesh m = build_mesh(3, 3, Rect{});
    const ProblemSpec spec = make_spec(m, Eigen::Matrix2d::Identity(), {0.0, 0.0},
                                       [](const Eigen::Vector2d&) { return 1.0; });
    const HomogeneousFluxForms forms = homogeneous_flux_forms(m, spec, LambdaVariant::Grid);
    Eigen::VectorXd u = Eigen::VectorXd::Constant(m.n_unknowns(), 5.5);
    for (int e : m.interior_edges) {
        const LinearForm f = cross_flux(m, spec, e, 0.0, 0.5, forms);
        CHECK(f.evaluate(u) == doctest::Approx(0.0).epsilon(1e-13));
    }
}

}
