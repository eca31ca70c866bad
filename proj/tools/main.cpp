#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "cfhmm/analysis.hpp"
#include "cfhmm/config.hpp"

namespace {

using namespace cfhmm;

struct RunConfig {
    std::string case_id;
    std::string config_path;
    std::string variant = "ccw";
    int nx = 16;
    std::string scheme = "cf";
    std::string peclet = "grid";
    std::string lambda = "grid";
    std::string out;
    std::string format = "csv";
    std::string summary;
    double tolerance = 1e-10;
    std::vector<int> levels;
};

Scheme parse_scheme(const std::string& s) {
    if (s == "hf") return Scheme::HF;
    if (s == "cf") return Scheme::CF;
    throw DomainError("invalid scheme: " + s);
}

PecletVariant parse_peclet(const std::string& s) {
    if (s == "grid") return PecletVariant::Grid;
    if (s == "eigen") return PecletVariant::Eigen;
    throw DomainError("invalid peclet variant: " + s);
}

LambdaVariant parse_lambda(const std::string& s) {
    if (s == "grid") return LambdaVariant::Grid;
    if (s == "eigenvalue") return LambdaVariant::Eigenvalue;
    throw DomainError("invalid lambda variant: " + s);
}

std::pair<CartesianMesh, ProblemSpec> make_case(const RunConfig& cfg, int nx) {
    if (!cfg.config_path.empty()) return load_case_file(cfg.config_path);
    std::optional<RotationVariant> variant;
    if (cfg.variant == "cw") variant = RotationVariant::cw;
    else if (cfg.variant == "ccw") variant = RotationVariant::ccw;
    return builtin_case(parse_case_id(cfg.case_id), variant, nx);
}

int cmd_run(const RunConfig& cfg) {
    auto [mesh, spec] = make_case(cfg, cfg.nx);
    const SparseSystem sys = assemble(mesh, spec, parse_scheme(cfg.scheme),
                                      parse_peclet(cfg.peclet), parse_lambda(cfg.lambda));
    const Solution sol = solve(sys, cfg.tolerance);
    const FieldStats stats = field_stats(sol, mesh);

    std::optional<double> e1;
    if (spec.has_exact()) e1 = error_l1_relative(sol, spec, mesh);

    if (!cfg.out.empty()) {
        export_solution(sol, mesh, cfg.format == "vtk" ? ExportFormat::VtkLegacy
                                                       : ExportFormat::Csv,
                        cfg.out);
    }

    char line[256];
    if (e1)
        std::snprintf(line, sizeof(line),
                      "min=%.17g max=%.17g neg_frac=%.17g E1=%.17g", stats.min, stats.max,
                      stats.negative_cell_fraction, *e1);
    else
        std::snprintf(line, sizeof(line), "min=%.17g max=%.17g neg_frac=%.17g", stats.min,
                      stats.max, stats.negative_cell_fraction);
    std::cout << line << "\n";

    if (!cfg.summary.empty()) {
        std::ofstream out(cfg.summary);
        if (!out) throw IoError("cannot open " + cfg.summary);
        out << "min,max,neg_frac,E1\n";
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,", stats.min, stats.max,
                      stats.negative_cell_fraction);
        out << buf;
        if (e1) {
            std::snprintf(buf, sizeof(buf), "%.17g", *e1);
            out << buf;
        }
        out << "\n";
    }
    return 0;
}

int cmd_convergence(const RunConfig& cfg) {
    ConvergenceReport report;
    for (int nx : cfg.levels) {
        auto [mesh, spec] = make_case(cfg, nx);
        const SparseSystem sys = assemble(mesh, spec, parse_scheme(cfg.scheme),
                                          parse_peclet(cfg.peclet), parse_lambda(cfg.lambda));
        const Solution sol = solve(sys, cfg.tolerance);
        report.levels.emplace_back(nx, error_l1_relative(sol, spec, mesh));
    }
    report.orders = convergence_orders(report);

    std::ostringstream table;
    table << "mesh,E1,order\n";
    for (std::size_t i = 0; i < report.levels.size(); ++i) {
        char buf[128];
        if (i == 0)
            std::snprintf(buf, sizeof(buf), "%dx%d,%.4e,\n", report.levels[i].first,
                          report.levels[i].first, report.levels[i].second);
        else
            std::snprintf(buf, sizeof(buf), "%dx%d,%.4e,%.4f\n", report.levels[i].first,
                          report.levels[i].first, report.levels[i].second,
                          report.orders[i - 1]);
        table << buf;
    }
    std::cout << table.str();
    if (!cfg.out.empty()) {
        std::ofstream out(cfg.out);
        if (!out) throw IoError("cannot open " + cfg.out);
        out << table.str();
    }
    return 0;
}

void add_scheme_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--scheme", cfg.scheme, "Flux scheme")
        ->check(CLI::IsMember({"hf", "cf"}))
        ->capture_default_str();
    cmd->add_option("--peclet", cfg.peclet, "Peclet number variant")
        ->check(CLI::IsMember({"grid", "eigen"}))
        ->capture_default_str();
    cmd->add_option("--lambda", cfg.lambda, "Advective scaling factor variant")
        ->check(CLI::IsMember({"grid", "eigenvalue"}))
        ->capture_default_str();
    cmd->add_option("--tol", cfg.tolerance, "Solver relative residual tolerance")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("CFHMM_THREADS"))
        Eigen::setNbThreads(std::atoi(threads));

    CLI::App app{"Finite-volume solver for stationary anisotropic advection-diffusion "
                 "equations (HMM diffusive fluxes, hybridised SG advection, complete-flux "
                 "corrections)"};
    app.require_subcommand(1);

    RunConfig cfg;

    CLI::App* run = app.add_subcommand("run", "Solve one case and export the field");
    run->add_option("--case", cfg.case_id, "Built-in case id (tc1..tc5)");
    run->add_option("--config", cfg.config_path, "User-defined case file");
    run->add_option("--variant", cfg.variant, "Velocity orientation for tc4")
        ->check(CLI::IsMember({"ccw", "cw"}))
        ->capture_default_str();
    run->add_option("--nx", cfg.nx, "Cells per axis")->capture_default_str();
    run->add_option("--out", cfg.out, "Field export path");
    run->add_option("--format", cfg.format, "Export format")
        ->check(CLI::IsMember({"csv", "vtk"}))
        ->capture_default_str();
    run->add_option("--summary", cfg.summary, "Stats summary CSV path");
    add_scheme_flags(run, cfg);

    CLI::App* conv = app.add_subcommand("convergence", "Refinement sweep with E1 and orders");
    conv->add_option("--case", cfg.case_id, "Built-in case id (tc1..tc5)");
    conv->add_option("--config", cfg.config_path, "User-defined case file");
    conv->add_option("--variant", cfg.variant, "Velocity orientation for tc4")
        ->check(CLI::IsMember({"ccw", "cw"}));
    conv->add_option("--levels", cfg.levels, "Doubling resolutions, e.g. 16 32 64")
        ->required();
    conv->add_option("--out", cfg.out, "Table CSV path");
    add_scheme_flags(conv, cfg);

    try {
        app.parse(argc, argv);
        if (cfg.case_id.empty() && cfg.config_path.empty())
            throw CLI::ValidationError("one of --case or --config is required");
        if (run->parsed()) return cmd_run(cfg);
        return cmd_convergence(cfg);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const cfhmm::Error& e) {
        std::cerr << "error code=" << e.code() << " msg=\"" << e.what() << "\"\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error code=Internal msg=\"" << e.what() << "\"\n";
        return 2;
    }
}
