#include "cfhmm/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace cfhmm {

double error_l1_relative(const Solution& sol, const ProblemSpec& spec,
                         const CartesianMesh& mesh) {
    if (!spec.has_exact()) throw NoExactSolution("problem has no exact solution");
    double num = 0.0, den = 0.0;
    for (int k = 0; k < mesh.n_cells(); ++k) {
        const Cell& c = mesh.cells[k];
        const double exact = spec.exact(c.center);
        num += c.area * std::abs(sol.cell_value(k) - exact);
        den += c.area * std::abs(exact);
    }
    return num / den;
}

std::vector<double> convergence_orders(const ConvergenceReport& report) {
    if (report.levels.size() < 2)
        throw NonDoublingLevels("at least two refinement levels required");
    std::vector<double> orders;
    for (std::size_t i = 0; i + 1 < report.levels.size(); ++i) {
        if (report.levels[i + 1].first != 2 * report.levels[i].first)
            throw NonDoublingLevels("mesh resolutions must double between levels");
        orders.push_back(std::log2(report.levels[i].second / report.levels[i + 1].second));
    }
    return orders;
}

FieldStats field_stats(const Solution& sol, const CartesianMesh& mesh) {
    FieldStats stats;
    if (mesh.n_cells() == 0) return stats;
    stats.min = stats.max = sol.cell_value(0);
    for (int k = 0; k < mesh.n_cells(); ++k) {
        const double v = sol.cell_value(k);
        stats.min = std::min(stats.min, v);
        stats.max = std::max(stats.max, v);
    }
    // A cell counts as negative only beyond a round-off floor relative to the
    // field scale; in regions where the solution decays below machine
    // precision the sign of the computed value carries no information.
    const double floor = 1e-14 * std::max(std::abs(stats.min), std::abs(stats.max));
    int negatives = 0;
    for (int k = 0; k < mesh.n_cells(); ++k)
        if (sol.cell_value(k) < -floor) ++negatives;
    stats.negative_cell_fraction = static_cast<double>(negatives) / mesh.n_cells();
    return stats;
}

namespace {

void write_csv(const Solution& sol, const CartesianMesh& mesh, std::ofstream& out) {
    out << "x,y,c\n";
    char buf[128];
    for (int k = 0; k < mesh.n_cells(); ++k) {
        const Cell& c = mesh.cells[k];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", c.center.x(), c.center.y(),
                      sol.cell_value(k));
        out << buf;
    }
}

void write_vtk(const Solution& sol, const CartesianMesh& mesh, std::ofstream& out) {
    constexpr double kInactive = -1e30;
    out << "# vtk DataFile Version 3.0\n"
        << "cell-centered scalar field\n"
        << "ASCII\n"
        << "DATASET STRUCTURED_POINTS\n"
        << "DIMENSIONS " << mesh.nx + 1 << ' ' << mesh.ny + 1 << " 1\n"
        << "ORIGIN " << mesh.bounds.x0 << ' ' << mesh.bounds.y0 << " 0\n"
        << "SPACING " << mesh.hx << ' ' << mesh.hy << " 1\n"
        << "CELL_DATA " << static_cast<long>(mesh.nx) * mesh.ny << '\n';

    char buf[64];
    out << "SCALARS c double 1\nLOOKUP_TABLE default\n";
    for (int j = 0; j < mesh.ny; ++j) {
        for (int i = 0; i < mesh.nx; ++i) {
            const int k = mesh.cell_index[static_cast<std::size_t>(j) * mesh.nx + i];
            std::snprintf(buf, sizeof(buf), "%.17g\n", k >= 0 ? sol.cell_value(k) : kInactive);
            out << buf;
        }
    }
    out << "SCALARS active int 1\nLOOKUP_TABLE default\n";
    for (int j = 0; j < mesh.ny; ++j)
        for (int i = 0; i < mesh.nx; ++i)
            out << (mesh.cell_index[static_cast<std::size_t>(j) * mesh.nx + i] >= 0 ? 1 : 0)
                << '\n';
}

} // namespace

void export_solution(const Solution& sol, const CartesianMesh& mesh, ExportFormat format,
                     const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    if (format == ExportFormat::Csv)
        write_csv(sol, mesh, out);
    else
        write_vtk(sol, mesh, out);
    out.flush();
    if (!out) throw IoError("write to " + path + " failed");
}

} // namespace cfhmm
