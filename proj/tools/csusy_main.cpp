// Command-line front end: build confluent transformations, sample partner
// potentials and transformed states, evaluate Wronskian-identity integrals
// and norms, and run the invariant verification suite.
//
// Exit codes: 0 success; 1 configuration error or verification failures;
// 2 irregular transformation without --force; 3 numerical failure.

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "csusy/cli.hpp"

namespace {

csusy::GridSpec parse_grid(const std::string& spec) {
    csusy::GridSpec g;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> g.x_min >> c1 >> g.x_max >> c2 >> g.n_points) || c1 != ':' || c2 != ':')
        throw csusy::ConfigError("grid must be given as min:max:n, e.g. 0:1:501");
    return g;
}

} // namespace

int main(int argc, char** argv) {
    using csusy::cli::RunConfig;
    CLI::App app{"confluent second-order chain transformations and "
                 "Wronskian-identity integrals"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value configuration file (flags win)");

    RunConfig cfg;
    std::string model_str = "box", rep_str = "df", format_str = "csv", grid_str;

    app.add_option("--model", model_str, "model: box, radial_osc, edho")
        ->check(CLI::IsMember({"box", "radial_osc", "edho"}));
    app.add_option("--ell", cfg.ell, "angular momentum (radial_osc)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--lambda", cfg.lambda, "factorization energy");
    app.add_option("--rep", rep_str, "Wronskian representation: df or vc")
        ->check(CLI::IsMember({"df", "vc"}));
    app.add_option("--k", cfg.K, "free constant K (df representation)");
    app.add_option("--omega0", cfg.omega0, "free constant omega0 (vc representation)");
    app.add_option("--x0", cfg.x0,
                   "anchor point x0 (vc representation; lower limit for integrate)");
    app.add_option("--eps", cfg.epsilons, "state energies (comma separated)")
        ->delimiter(',');
    app.add_option("--n-states", cfg.n_states, "number of transformed states")
        ->check(CLI::PositiveNumber);
    app.add_option("--grid", grid_str, "sampling grid min:max:n");
    app.add_option("--format", format_str, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out, "output path");
    app.add_option("--seed", cfg.seed, "RNG seed for randomized sweeps");
    app.add_flag("--force", cfg.force, "emit output even when the transform is irregular");
    app.add_option("--n", cfg.n_index, "state index for norm/integrate");
    app.add_option("--family", cfg.family, "integrand family: u1 or u2")
        ->check(CLI::IsMember({"u1", "u2"}));
    app.add_option("--x", cfg.x_to, "integration upper limit");
    app.add_option("--quad-tol", [&cfg](const std::vector<std::string>& v) {
        cfg.quad_tol = std::stod(v.back());
        return true;
    }, "override quadrature tolerances");
    app.add_option("--residual-tol", [&cfg](const std::vector<std::string>& v) {
        cfg.residual_tol = std::stod(v.back());
        return true;
    }, "override residual-check tolerances");
    app.add_option("--series-tol", [&cfg](const std::vector<std::string>& v) {
        cfg.series_tol = std::stod(v.back());
        return true;
    }, "override series-identity tolerances");

    auto* partner = app.add_subcommand(
        "partner", "sample the partner potential and transformed states");
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    auto* norm = app.add_subcommand("norm", "bound-state normalization, both routes");
    auto* integrate =
        app.add_subcommand("integrate", "integral of u^2 by identity and quadrature");
    auto* regularity =
        app.add_subcommand("regularity", "endpoint limits and admissible constants");
    for (auto* sub : {partner, verify, norm, integrate, regularity}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        static const std::map<std::string, RunConfig::Model> models = {
            {"box", RunConfig::Model::box},
            {"radial_osc", RunConfig::Model::radial_osc},
            {"edho", RunConfig::Model::edho}};
        cfg.model = models.at(model_str);
        cfg.model_set = app.count("--model") > 0;
        cfg.rep = rep_str == "vc" ? RunConfig::Rep::vc : RunConfig::Rep::df;
        cfg.format = format_str == "json" ? RunConfig::Format::json : RunConfig::Format::csv;
        if (!grid_str.empty()) {
            cfg.grid = parse_grid(grid_str);
            cfg.grid_set = true;
        }

        if (partner->parsed()) return csusy::cli::cmd_partner(cfg);
        if (verify->parsed()) return csusy::cli::cmd_verify(cfg);
        if (norm->parsed()) return csusy::cli::cmd_norm(cfg);
        if (integrate->parsed()) return csusy::cli::cmd_integrate(cfg);
        if (regularity->parsed()) return csusy::cli::cmd_regularity(cfg);
    } catch (const csusy::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const csusy::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
