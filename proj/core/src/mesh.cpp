#include "cfhmm/mesh.hpp"

#include <cmath>

namespace cfhmm {

namespace {

// Snap a coordinate to the nearest grid line index; error if not aligned.
int grid_line_index(double coord, double origin, double h, int n, const char* what) {
    const double t = (coord - origin) / h;
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-9 * std::max(1.0, std::abs(t)) || r < 0 || r > n) {
        throw HoleNotGridAligned(std::string(what) + " does not lie on a grid line");
    }
    return static_cast<int>(r);
}

} // namespace

double CartesianMesh::active_area() const {
    double a = 0.0;
    for (const auto& c : cells) a += c.area;
    return a;
}

int CartesianMesh::side_of(int cell, int edge) const {
    const auto& e = cells[cell].edge;
    for (int s = 0; s < 4; ++s)
        if (e[s] == edge) return s;
    throw DomainError("edge is not a side of the given cell");
}

std::array<int, 2> CartesianMesh::cross_edges(int cell, int edge) const {
    const int s = side_of(cell, edge);
    const auto& e = cells[cell].edge;
    if (s == West || s == East) return {e[North], e[South]};
    return {e[East], e[West]};
}

int CartesianMesh::opposite_cell(int edge, int cell) const {
    const Edge& e = edges[edge];
    if (e.cell_k == cell) return e.cell_l;
    if (e.cell_l == cell) return e.cell_k;
    throw DomainError("cell is not adjacent to the given edge");
}

CartesianMesh build_mesh(int nx, int ny, const Rect& bounds, const std::optional<Rect>& hole) {
    if (nx < 1 || ny < 1) throw DomainError("nx and ny must be at least 1");

    CartesianMesh m;
    m.nx = nx;
    m.ny = ny;
    m.bounds = bounds;
    m.hx = bounds.width() / nx;
    m.hy = bounds.height() / ny;

    std::vector<bool> active(static_cast<std::size_t>(nx) * ny, true);
    if (hole) {
        const int i0 = grid_line_index(hole->x0, bounds.x0, m.hx, nx, "hole x0");
        const int i1 = grid_line_index(hole->x1, bounds.x0, m.hx, nx, "hole x1");
        const int j0 = grid_line_index(hole->y0, bounds.y0, m.hy, ny, "hole y0");
        const int j1 = grid_line_index(hole->y1, bounds.y0, m.hy, ny, "hole y1");
        if (i0 >= i1 || j0 >= j1) throw HoleNotGridAligned("hole rectangle is empty");
        for (int j = j0; j < j1; ++j)
            for (int i = i0; i < i1; ++i) active[static_cast<std::size_t>(j) * nx + i] = false;
    }

    m.cell_index.assign(static_cast<std::size_t>(nx) * ny, -1);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const std::size_t lat = static_cast<std::size_t>(j) * nx + i;
            if (!active[lat]) continue;
            m.cell_index[lat] = static_cast<int>(m.cells.size());
            Cell c;
            c.ix = i;
            c.iy = j;
            c.center = {bounds.x0 + (i + 0.5) * m.hx, bounds.y0 + (j + 0.5) * m.hy};
            c.area = m.hx * m.hy;
            c.edge = {-1, -1, -1, -1};
            m.cells.push_back(c);
        }
    }
    if (m.cells.empty()) throw EmptyMesh("no active cells remain");

    auto cell_at = [&](int i, int j) -> int {
        if (i < 0 || i >= nx || j < 0 || j >= ny) return -1;
        return m.cell_index[static_cast<std::size_t>(j) * nx + i];
    };

    // Vertical edges (normal along x), then horizontal edges.
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            const int west = cell_at(i - 1, j);
            const int east = cell_at(i, j);
            if (west < 0 && east < 0) continue;
            Edge e;
            e.axis = 0;
            e.length = m.hy;
            e.midpoint = {bounds.x0 + i * m.hx, bounds.y0 + (j + 0.5) * m.hy};
            e.cell_k = west;
            e.cell_l = east;
            const int id = static_cast<int>(m.edges.size());
            if (west >= 0) m.cells[west].edge[East] = id;
            if (east >= 0) m.cells[east].edge[West] = id;
            m.edges.push_back(e);
        }
    }
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int south = cell_at(i, j - 1);
            const int north = cell_at(i, j);
            if (south < 0 && north < 0) continue;
            Edge e;
            e.axis = 1;
            e.length = m.hx;
            e.midpoint = {bounds.x0 + (i + 0.5) * m.hx, bounds.y0 + j * m.hy};
            e.cell_k = south;
            e.cell_l = north;
            const int id = static_cast<int>(m.edges.size());
            if (south >= 0) m.cells[south].edge[North] = id;
            if (north >= 0) m.cells[north].edge[South] = id;
            m.edges.push_back(e);
        }
    }

    for (int e = 0; e < m.n_edges(); ++e)
        if (m.edges[e].interior()) m.interior_edges.push_back(e);

    return m;
}

} // namespace cfhmm
