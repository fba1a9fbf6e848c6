// Command-line surface for the hyperball packing library: summary tables,
// density sweeps, optimization and constraint validation as CSV/JSON.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hyperball/hyperball.hpp>

namespace {

hyperball::TruncatedSimplexModel make_model(int dim, int p, double quad_tol) {
    if (dim == 3) return hyperball::build_3d(static_cast<double>(p));
    return hyperball::build_5d(quad_tol);
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperball packing densities in truncated regular simplex tilings "
                 "of 3- and 5-dimensional hyperbolic space"};
    app.require_subcommand(1);

    // --- table1: per-p summary of the congruent 3D packings -----------------
    auto* table_cmd = app.add_subcommand(
        "table1", "Congruent {p,3,3} packing summary (h, orthoscheme volume, lens share, density)");
    std::vector<int> table_ps{7, 8, 9, 20, 50, 100};
    std::string table_format = "csv";
    table_cmd->add_option("--p", table_ps, "Schlafli parameters p (integers >= 7)")
        ->delimiter(',');
    table_cmd->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    table_cmd->callback([&] {
        const auto rows = hyperball::density_table(table_ps);
        if (table_format == "csv")
            std::cout << hyperball::table_to_csv(rows);
        else
            emit_json(hyperball::table_to_json(rows));
    });

    // --- sweep: density over the admissible shift range ---------------------
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Non-congruent density delta(x) on a uniform grid over [0, x_max]");
    int sweep_dim = 3;
    int sweep_p = 7;
    int sweep_points = 101;
    double sweep_tol = 1e-11;
    std::string sweep_format = "csv";
    sweep_cmd->add_option("--dim", sweep_dim, "Dimension of the model")
        ->check(CLI::IsMember({3, 5}));
    sweep_cmd->add_option("--p", sweep_p, "Schlafli parameter (3D only; the 5D tile is fixed)");
    sweep_cmd->add_option("--points", sweep_points, "Number of grid points")
        ->check(CLI::Range(2, 10000000));
    sweep_cmd->add_option("--tol", sweep_tol, "Quadrature tolerance for the 5D orthoscheme volume");
    sweep_cmd->add_option("--format", sweep_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->callback([&] {
        const auto model = make_model(sweep_dim, sweep_p, sweep_tol);
        const auto pts = hyperball::density_sweep(model, sweep_points);
        if (sweep_format == "csv")
            std::cout << hyperball::sweep_to_csv(pts);
        else
            emit_json(hyperball::sweep_to_json(model, pts));
    });

    // --- optimize: over the shift x or over real p ---------------------------
    auto* opt_cmd = app.add_subcommand("optimize", "Maximize the packing density (JSON output)");
    std::string opt_mode;
    int opt_dim = 3;
    int opt_p = 7;
    double opt_tol = 0.0;  // 0 = use the mode's default
    opt_cmd->add_option("--mode", opt_mode, "over_x: shift within one model; over_p: real p > 6 (3D)")
        ->required()
        ->check(CLI::IsMember({"over_x", "over_p"}));
    opt_cmd->add_option("--dim", opt_dim, "Dimension (over_x only)")->check(CLI::IsMember({3, 5}));
    opt_cmd->add_option("--p", opt_p, "Schlafli parameter (over_x, 3D only)");
    opt_cmd->add_option("--tol", opt_tol, "Location tolerance of the search");
    opt_cmd->callback([&] {
        if (opt_mode == "over_x") {
            const auto model = make_model(opt_dim, opt_p, 1e-11);
            const auto best = hyperball::maximize_over_x(model, opt_tol > 0.0 ? opt_tol : 1e-9);
            emit_json(hyperball::optimum_x_to_json(model, best));
        } else {
            const auto best =
                hyperball::maximize_over_p(6.001, 30.0, opt_tol > 0.0 ? opt_tol : 1e-6);
            emit_json(hyperball::optimum_p_to_json(best));
        }
    });

    // --- validate: packing constraints for a given shift ---------------------
    auto* val_cmd =
        app.add_subcommand("validate", "Check the packing constraints for a shift x (JSON output)");
    int val_dim = 3;
    int val_p = 7;
    double val_x = 0.0;
    double val_tol = 1e-11;
    val_cmd->add_option("--dim", val_dim, "Dimension of the model")->check(CLI::IsMember({3, 5}));
    val_cmd->add_option("--p", val_p, "Schlafli parameter (3D only)");
    val_cmd->add_option("--x", val_x, "Height shift: ball 0 grows to h+x, the others shrink to h-x")
        ->required()
        ->check(CLI::NonNegativeNumber);
    val_cmd->add_option("--tol", val_tol, "Quadrature tolerance for the 5D orthoscheme volume");
    val_cmd->callback([&] {
        const auto model = make_model(val_dim, val_p, val_tol);
        const auto report = hyperball::validate(model, hyperball::ball_heights(model, val_x));
        emit_json(hyperball::validation_to_json(model, val_x, report));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
