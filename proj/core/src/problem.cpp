#include "cfhmm/problem.hpp"

#include <cmath>

namespace cfhmm {

EigenPair2x2 eigen_2x2(const Eigen::Matrix2d& t) {
    const double a = t(0, 0), b = t(0, 1), b2 = t(1, 0), c = t(1, 1);
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1e-300});
    if (std::abs(b - b2) > 1e-14 * scale) throw NotSymmetric("off-diagonal entries differ");

    EigenPair2x2 ep;
    const double mean = 0.5 * (a + c);
    const double half_diff = 0.5 * (a - c);
    const double rad = std::hypot(half_diff, b);
    ep.lambda1 = mean - rad;
    ep.lambda2 = mean + rad;

    if (rad == 0.0) {
        ep.u1 = {1.0, 0.0};
        ep.u2 = {0.0, 1.0};
        return ep;
    }
    // Eigenvector for lambda2 from the better-conditioned row of (t - lambda2 I).
    Eigen::Vector2d v2;
    if (half_diff >= 0.0)
        v2 = {half_diff + rad, b};
    else
        v2 = {b, rad - half_diff};
    if (v2.norm() == 0.0) v2 = {1.0, 0.0};
    ep.u2 = v2.normalized();
    ep.u1 = {-ep.u2.y(), ep.u2.x()};
    return ep;
}

bool ProblemSpec::all_neumann(const CartesianMesh& mesh) const {
    for (int e = 0; e < mesh.n_edges(); ++e)
        if (!mesh.edges[e].interior() && boundary_kind[e] == BcKind::Dirichlet) return false;
    return true;
}

double edge_normal_velocity(const CartesianMesh& mesh, int edge, int cell,
                            const ProblemSpec& spec) {
    const Eigen::Vector2d n = mesh.normal(cell, edge);
    return edge_average_velocity(mesh, edge, spec).dot(n);
}

Eigen::Vector2d edge_average_velocity(const CartesianMesh& mesh, int edge,
                                      const ProblemSpec& spec) {
    const Edge& e = mesh.edges[edge];
    const Eigen::Vector2d tangent = (e.axis == 0) ? Eigen::Vector2d(0.0, 1.0)
                                                  : Eigen::Vector2d(1.0, 0.0);
    const double off = 0.5 * e.length / std::sqrt(3.0);  // 2-point Gauss
    const Eigen::Vector2d p1 = e.midpoint - off * tangent;
    const Eigen::Vector2d p2 = e.midpoint + off * tangent;
    return 0.5 * (spec.velocity(p1) + spec.velocity(p2));
}

double cell_source(const CartesianMesh& mesh, int cell, const ProblemSpec& spec) {
    return spec.source(mesh.cells[cell].center);
}

CaseId parse_case_id(const std::string& name) {
    if (name == "tc1") return CaseId::tc1;
    if (name == "tc2") return CaseId::tc2;
    if (name == "tc3") return CaseId::tc3;
    if (name == "tc4") return CaseId::tc4;
    if (name == "tc5") return CaseId::tc5;
    throw DomainError("unknown case id: " + name);
}

namespace {

constexpr double kPi = 3.14159265358979323846;

// Manufactured case: c = sin(pi x) sin(pi y), V = (1,2), constant Lam.
ProblemSpec manufactured_case(const CartesianMesh& mesh, const Eigen::Matrix2d& lam) {
    ProblemSpec spec;
    spec.diffusion.assign(mesh.cells.size(), lam);
    spec.velocity = [](const Eigen::Vector2d&) { return Eigen::Vector2d(1.0, 2.0); };
    const double l11 = lam(0, 0), l12 = lam(0, 1), l22 = lam(1, 1);
    spec.source = [l11, l12, l22](const Eigen::Vector2d& p) {
        const double sx = std::sin(kPi * p.x()), sy = std::sin(kPi * p.y());
        const double cx = std::cos(kPi * p.x()), cy = std::cos(kPi * p.y());
        return kPi * cx * sy + 2.0 * kPi * sx * cy
             + kPi * kPi * (l11 + l22) * sx * sy
             - 2.0 * l12 * kPi * kPi * cx * cy;
    };
    spec.exact = [](const Eigen::Vector2d& p) {
        return std::sin(kPi * p.x()) * std::sin(kPi * p.y());
    };
    spec.dirichlet = [](const Eigen::Vector2d&) { return 0.0; };
    spec.neumann = [](const Eigen::Vector2d&) { return 0.0; };
    spec.boundary_kind.assign(mesh.edges.size(), BcKind::Dirichlet);
    return spec;
}

} // namespace

std::pair<CartesianMesh, ProblemSpec> builtin_case(CaseId id,
                                                   std::optional<RotationVariant> variant,
                                                   int nx) {
    const Rect unit{0.0, 0.0, 1.0, 1.0};
    switch (id) {
        case CaseId::tc1: {
            CartesianMesh mesh = build_mesh(nx, nx, unit);
            ProblemSpec spec = manufactured_case(mesh, 1e-8 * Eigen::Matrix2d::Identity());
            return {std::move(mesh), std::move(spec)};
        }
        case CaseId::tc2: {
            CartesianMesh mesh = build_mesh(nx, nx, unit);
            Eigen::Matrix2d lam;
            lam << 0.5 * (1.0 + 1e-8), 0.5 * (1.0 - 1e-8),
                   0.5 * (1.0 - 1e-8), 0.5 * (1.0 + 1e-8);
            ProblemSpec spec = manufactured_case(mesh, lam);
            return {std::move(mesh), std::move(spec)};
        }
        case CaseId::tc3: {
            CartesianMesh mesh = build_mesh(nx, nx, unit);
            Eigen::Matrix2d lam;
            lam << 1.5, 1e-4, 1e-4, 1e-8;
            ProblemSpec spec = manufactured_case(mesh, lam);
            return {std::move(mesh), std::move(spec)};
        }
        case CaseId::tc4: {
            if (nx % 3 != 0)
                throw ResolutionIncompatible("tc4 requires nx divisible by 3");
            CartesianMesh mesh = build_mesh(nx, nx, unit);
            ProblemSpec spec;
            Eigen::Matrix2d lam_y, lam_x;  // strong diffusion along y resp. x
            lam_y << 1e-6, 0.0, 0.0, 1.0;
            lam_x << 1.0, 0.0, 0.0, 1e-6;
            spec.diffusion.reserve(mesh.cells.size());
            for (const auto& c : mesh.cells) {
                const bool left = c.center.x() < 2.0 / 3.0;
                const bool bottom = c.center.y() < 2.0 / 3.0;
                // Omega1 (left,bottom) and Omega3 (right,top) diffuse along y.
                spec.diffusion.push_back(left == bottom ? lam_y : lam_x);
            }
            const double sgn = (variant && *variant == RotationVariant::cw) ? -1.0 : 1.0;
            spec.velocity = [sgn](const Eigen::Vector2d& p) {
                return Eigen::Vector2d(
                    sgn * 40.0 * p.x() * (2.0 * p.y() - 1.0) * (p.x() - 1.0),
                    -sgn * 40.0 * p.y() * (2.0 * p.x() - 1.0) * (p.y() - 1.0));
            };
            spec.source = [](const Eigen::Vector2d& p) {
                const double r = std::hypot(p.x() - 0.5, p.y() - 0.5);
                const double d = r - 0.35;
                return 1e-2 * std::exp(-d * d / 0.005);
            };
            spec.dirichlet = [](const Eigen::Vector2d&) { return 0.0; };
            spec.neumann = [](const Eigen::Vector2d&) { return 0.0; };
            spec.boundary_kind.assign(mesh.edges.size(), BcKind::Dirichlet);
            return {std::move(mesh), std::move(spec)};
        }
        case CaseId::tc5: {
            if (nx % 9 != 0)
                throw ResolutionIncompatible("tc5 requires nx divisible by 9");
            const Rect hole{4.0 / 9.0, 4.0 / 9.0, 5.0 / 9.0, 5.0 / 9.0};
            CartesianMesh mesh = build_mesh(nx, nx, unit, hole);
            ProblemSpec spec;
            // Lam = R(-pi/6) diag(1000, 1) R(pi/6), R(t) = [[cos t, sin t], [-sin t, cos t]].
            Eigen::Matrix2d rot, diag;
            const double ct = std::cos(kPi / 6.0), st = std::sin(kPi / 6.0);
            rot << ct, st, -st, ct;
            diag << 1000.0, 0.0, 0.0, 1.0;
            const Eigen::Matrix2d lam = rot.transpose() * diag * rot;
            spec.diffusion.assign(mesh.cells.size(), lam);
            spec.velocity = [](const Eigen::Vector2d&) { return Eigen::Vector2d(700.0, 700.0); };
            spec.source = [](const Eigen::Vector2d&) { return 0.0; };
            // Gamma1 = outer boundary (c = 0), Gamma2 = hole boundary (c = 2).
            spec.dirichlet = [unit](const Eigen::Vector2d& p) {
                return unit.contains(p) ? 2.0 : 0.0;
            };
            spec.neumann = [](const Eigen::Vector2d&) { return 0.0; };
            spec.boundary_kind.assign(mesh.edges.size(), BcKind::Dirichlet);
            return {std::move(mesh), std::move(spec)};
        }
    }
    throw DomainError("unhandled case id");
}

} // namespace cfhmm
