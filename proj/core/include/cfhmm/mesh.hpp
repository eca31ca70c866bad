#ifndef CFHMM_MESH_HPP
#define CFHMM_MESH_HPP

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cfhmm/errors.hpp"

namespace cfhmm {

struct Rect {
    double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool contains(const Eigen::Vector2d& p) const {
        return p.x() > x0 && p.x() < x1 && p.y() > y0 && p.y() < y1;
    }
};

/// Local edge numbering inside a cell. Fixed for all cells.
enum Side : int { West = 0, East = 1, South = 2, North = 3 };

struct Cell {
    int ix, iy;              // lattice coordinates
    Eigen::Vector2d center;  // barycenter
    double area;
    std::array<int, 4> edge; // global edge ids, indexed by Side
};

/// Edges are axis-aligned. axis==0: vertical edge (normal along x),
/// axis==1: horizontal edge (normal along y). cell_k is the west/south
/// neighbor and cell_l the east/north one; -1 when absent or inactive.
struct Edge {
    Eigen::Vector2d midpoint;
    double length;
    int axis;
    int cell_k;
    int cell_l;
    bool interior() const { return cell_k >= 0 && cell_l >= 0; }
    int boundary_cell() const { return cell_k >= 0 ? cell_k : cell_l; }
};

/// Uniform Cartesian mesh with an active-cell mask (holes are masked cells,
/// not removed geometry). Immutable after construction.
class CartesianMesh {
public:
    int nx = 0, ny = 0;
    Rect bounds;
    double hx = 0.0, hy = 0.0;
    std::vector<Cell> cells;
    std::vector<Edge> edges;
    std::vector<int> cell_index;  // lattice (iy*nx+ix) -> active cell id or -1
    std::vector<int> interior_edges;

    int n_cells() const { return static_cast<int>(cells.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }
    int n_unknowns() const { return n_cells() + n_edges(); }

    // DOF ordering: all active cells (row-major), then all edges
    // (vertical block first, then horizontal).
    int dof_of_cell(int k) const { return k; }
    int dof_of_edge(int e) const { return n_cells() + e; }

    double active_area() const;

    /// n_{K,sigma} for a local side of a cell.
    static Eigen::Vector2d side_normal(int side) {
        switch (side) {
            case West: return {-1.0, 0.0};
            case East: return {1.0, 0.0};
            case South: return {0.0, -1.0};
            default: return {0.0, 1.0};
        }
    }

    /// Orthogonal distance d_{K,sigma} from the cell center to a side.
    double wall_distance(int side) const { return (side == West || side == East) ? 0.5 * hx : 0.5 * hy; }

    /// Local side index of a global edge within a cell.
    int side_of(int cell, int edge) const;

    Eigen::Vector2d normal(int cell, int edge) const { return side_normal(side_of(cell, edge)); }

    /// The two edges of K orthogonal to sigma. For a vertical sigma these
    /// are (north, south); for a horizontal sigma, (east, west).
    std::array<int, 2> cross_edges(int cell, int edge) const;

    /// Neighbor across an interior edge; -1 for boundary edges.
    int opposite_cell(int edge, int cell) const;
};

CartesianMesh build_mesh(int nx, int ny, const Rect& bounds,
                         const std::optional<Rect>& hole = std::nullopt);

} // namespace cfhmm

#endif
