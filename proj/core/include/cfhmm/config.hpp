#ifndef CFHMM_CONFIG_HPP
#define CFHMM_CONFIG_HPP

#include <string>
#include <utility>

#include "cfhmm/problem.hpp"

namespace cfhmm {

/// Load a user-defined case from a plain-text key-value file. See the
/// README for the full grammar; briefly:
///
///   nx = 16            ny = 16            # resolution (ny defaults to nx)
///   x0 = 0  y0 = 0  x1 = 1  y1 = 1        # domain rectangle
///   lam11 = 1  lam12 = 0  lam22 = 1       # constant diffusion tensor
///   vx = 1  vy = 2                        # constant velocity
///   source = zero | constant | trig       # trig: manufactured for
///   source_value = 1.0                    #   c = sin(pi x) sin(pi y)
///   bc_left = dirichlet | neumann         # likewise bc_right/bc_bottom/bc_top
///   g = 0.0            h = 0.0            # constant boundary data
///   mean_value = 0.0                      # required when all sides Neumann
///   exact = none | trig
///
/// Lines starting with '#' and blank lines are ignored.
std::pair<CartesianMesh, ProblemSpec> load_case_file(const std::string& path);

} // namespace cfhmm

#endif
