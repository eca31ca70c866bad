#ifndef CFHMM_ANALYSIS_HPP
#define CFHMM_ANALYSIS_HPP

#include <string>
#include <vector>

#include "cfhmm/assembly.hpp"

namespace cfhmm {

/// Relative L1 error of the piecewise-constant reconstruction against the
/// exact solution sampled at cell centers.
double error_l1_relative(const Solution& sol, const ProblemSpec& spec,
                         const CartesianMesh& mesh);

struct ConvergenceReport {
    std::vector<std::pair<int, double>> levels;  // (nx, E1)
    std::vector<double> orders;                  // log2(E1_i / E1_{i+1})
};

std::vector<double> convergence_orders(const ConvergenceReport& report);

struct FieldStats {
    double min = 0.0;
    double max = 0.0;
    double negative_cell_fraction = 0.0;
};

FieldStats field_stats(const Solution& sol, const CartesianMesh& mesh);

enum class ExportFormat { Csv, VtkLegacy };

/// CSV: header x,y,c, one row per active cell center, 17 significant
/// digits. VTK legacy ASCII: STRUCTURED_POINTS with CELL_DATA scalar `c`
/// (-1e30 sentinel for inactive cells) and an `active` mask array.
void export_solution(const Solution& sol, const CartesianMesh& mesh, ExportFormat format,
                     const std::string& path);

} // namespace cfhmm

#endif
