#include "cfhmm/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cfhmm {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::map<std::string, std::string> parse_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        std::string eq, value;
        if (!(ls >> eq >> value) || eq != "=")
            throw ConfigError("expected 'key = value' at " + path + ":" +
                              std::to_string(lineno));
        kv[key] = value;
    }
    return kv;
}

double get_num(const std::map<std::string, std::string>& kv, const std::string& key,
               double fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for key '" + key + "': " + it->second);
    }
}

std::string get_str(const std::map<std::string, std::string>& kv, const std::string& key,
                    const std::string& fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

BcKind parse_bc(const std::string& s, const std::string& key) {
    if (s == "dirichlet") return BcKind::Dirichlet;
    if (s == "neumann") return BcKind::Neumann;
    throw ConfigError("invalid boundary kind for " + key + ": " + s);
}

} // namespace

std::pair<CartesianMesh, ProblemSpec> load_case_file(const std::string& path) {
    const auto kv = parse_key_values(path);

    static const std::set<std::string> known{
        "nx", "ny", "x0", "y0", "x1", "y1", "lam11", "lam12", "lam22", "vx", "vy",
        "source", "source_value", "bc_left", "bc_right", "bc_bottom", "bc_top",
        "g", "h", "mean_value", "exact"};
    for (const auto& [key, value] : kv)
        if (!known.count(key)) throw ConfigError("unknown key: " + key);

    const int nx = static_cast<int>(get_num(kv, "nx", 16));
    const int ny = static_cast<int>(get_num(kv, "ny", nx));
    Rect bounds{get_num(kv, "x0", 0.0), get_num(kv, "y0", 0.0), get_num(kv, "x1", 1.0),
                get_num(kv, "y1", 1.0)};
    if (nx < 1 || ny < 1 || bounds.width() <= 0.0 || bounds.height() <= 0.0)
        throw ConfigError("invalid mesh resolution or domain rectangle");

    CartesianMesh mesh = build_mesh(nx, ny, bounds);

    Eigen::Matrix2d lam;
    const double l11 = get_num(kv, "lam11", 1.0);
    const double l12 = get_num(kv, "lam12", 0.0);
    const double l22 = get_num(kv, "lam22", 1.0);
    lam << l11, l12, l12, l22;
    eigen_2x2(lam);  // validates symmetry and finiteness early

    ProblemSpec spec;
    spec.diffusion.assign(mesh.cells.size(), lam);

    const double vx = get_num(kv, "vx", 0.0), vy = get_num(kv, "vy", 0.0);
    spec.velocity = [vx, vy](const Eigen::Vector2d&) { return Eigen::Vector2d(vx, vy); };

    const std::string source = get_str(kv, "source", "zero");
    if (source == "zero") {
        spec.source = [](const Eigen::Vector2d&) { return 0.0; };
    } else if (source == "constant") {
        const double sv = get_num(kv, "source_value", 1.0);
        spec.source = [sv](const Eigen::Vector2d&) { return sv; };
    } else if (source == "trig") {
        spec.source = [l11, l12, l22, vx, vy](const Eigen::Vector2d& p) {
            const double sx = std::sin(kPi * p.x()), sy = std::sin(kPi * p.y());
            const double cx = std::cos(kPi * p.x()), cy = std::cos(kPi * p.y());
            return vx * kPi * cx * sy + vy * kPi * sx * cy
                 + kPi * kPi * (l11 + l22) * sx * sy
                 - 2.0 * l12 * kPi * kPi * cx * cy;
        };
    } else {
        throw ConfigError("invalid source kind: " + source);
    }

    const double g = get_num(kv, "g", 0.0);
    const double h = get_num(kv, "h", 0.0);
    spec.dirichlet = [g](const Eigen::Vector2d&) { return g; };
    spec.neumann = [h](const Eigen::Vector2d&) { return h; };

    const BcKind left = parse_bc(get_str(kv, "bc_left", "dirichlet"), "bc_left");
    const BcKind right = parse_bc(get_str(kv, "bc_right", "dirichlet"), "bc_right");
    const BcKind bottom = parse_bc(get_str(kv, "bc_bottom", "dirichlet"), "bc_bottom");
    const BcKind top = parse_bc(get_str(kv, "bc_top", "dirichlet"), "bc_top");

    spec.boundary_kind.assign(mesh.edges.size(), BcKind::Dirichlet);
    const double eps = 1e-12 * std::max(bounds.width(), bounds.height());
    for (int e = 0; e < mesh.n_edges(); ++e) {
        const Edge& edge = mesh.edges[e];
        if (edge.interior()) continue;
        BcKind kind = BcKind::Dirichlet;
        if (edge.axis == 0)
            kind = std::abs(edge.midpoint.x() - bounds.x0) < eps ? left : right;
        else
            kind = std::abs(edge.midpoint.y() - bounds.y0) < eps ? bottom : top;
        spec.boundary_kind[e] = kind;
    }

    if (kv.count("mean_value")) spec.mean_value = get_num(kv, "mean_value", 0.0);

    const std::string exact = get_str(kv, "exact", "none");
    if (exact != "none" && exact != "trig") throw ConfigError("invalid exact kind: " + exact);
    if (exact == "trig") {
        spec.exact = [](const Eigen::Vector2d& p) {
            return std::sin(kPi * p.x()) * std::sin(kPi * p.y());
        };
    }
    return {std::move(mesh), std::move(spec)};
}

} // namespace cfhmm
