#pragma once

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csusy/errors.hpp"
#include "csusy/fd.hpp"
#include "csusy/io.hpp"
#include "csusy/models.hpp"
#include "csusy/susy.hpp"
#include "csusy/verify.hpp"
#include "csusy/wronskid.hpp"

namespace csusy::cli {

struct RunConfig {
    enum class Model { box, radial_osc, edho };
    enum class Rep { df, vc };
    enum class Format { csv, json };

    Model model = Model::box;
    bool model_set = false;
    int ell = 1;
    double lambda = std::numeric_limits<double>::quiet_NaN();
    Rep rep = Rep::df;
    double K = std::numeric_limits<double>::quiet_NaN();
    double omega0 = std::numeric_limits<double>::quiet_NaN();
    double x0 = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> epsilons;
    int n_states = 3;
    GridSpec grid{0.0, 1.0, 501};
    bool grid_set = false;
    Format format = Format::csv;
    std::string out;
    std::optional<double> quad_tol;
    std::optional<double> residual_tol;
    std::optional<double> series_tol;
    std::uint64_t seed = 42;
    bool force = false;
    int n_index = -1;          // state index for norm/integrate
    std::string family = "u1"; // integrate: u1 or u2
    double x_to = std::numeric_limits<double>::quiet_NaN(); // integrate upper limit
};

inline const char* model_name(RunConfig::Model m) {
    switch (m) {
        case RunConfig::Model::box: return "box";
        case RunConfig::Model::radial_osc: return "radial_osc";
        default: return "edho";
    }
}

namespace detail {

struct Context {
    jordan::EnergyPotential pot;
    jordan::SolutionFamily u;
    jordan::SolutionFamily u2;
    double lambda = 0.0;
    double K = 0.0;
    double omega0 = 0.0;
    double x0 = 0.0;
    GridSpec grid;
    std::vector<double> eigenvalues;
};

inline QuadControl quad_control(const RunConfig& cfg) {
    QuadControl qc;
    if (cfg.quad_tol) {
        qc.abs_tol = *cfg.quad_tol;
        qc.rel_tol = *cfg.quad_tol;
    }
    return qc;
}

/// Fill model-dependent defaults and validate the grid against the domain.
inline Context resolve(const RunConfig& cfg) {
    Context c;
    switch (cfg.model) {
        case RunConfig::Model::box:
            c.pot = models::box_potential();
            c.u = models::box_u();
            c.u2 = models::box_u2();
            c.lambda = std::isnan(cfg.lambda) ? 4.0 * M_PI * M_PI : cfg.lambda;
            c.K = std::isnan(cfg.K) ? 0.555 : cfg.K;
            c.x0 = std::isnan(cfg.x0) ? 0.5 : cfg.x0;
            c.grid = cfg.grid_set ? cfg.grid : GridSpec{0.0, 1.0, 501};
            for (int n = 1; n <= 12; ++n) c.eigenvalues.push_back(models::box_eigenvalue(n));
            if (c.grid.x_min < 0.0 || c.grid.x_max > 1.0)
                throw ConfigError("box grid must lie inside [0, 1]");
            break;
        case RunConfig::Model::radial_osc:
            c.pot = models::rosc_potential(cfg.ell);
            c.u = models::rosc_u(cfg.ell);
            c.u2 = models::rosc_u2(cfg.ell);
            c.lambda = std::isnan(cfg.lambda) ? 8.0 : cfg.lambda;
            c.K = std::isnan(cfg.K) ? -0.01 : cfg.K;
            c.x0 = std::isnan(cfg.x0) ? 1.0 : cfg.x0;
            c.grid = cfg.grid_set ? cfg.grid : GridSpec{0.05, 6.0, 501};
            for (int n = 0; n <= 11; ++n)
                c.eigenvalues.push_back(models::rosc_eigenvalue(cfg.ell, n));
            if (c.grid.x_min <= 0.0)
                throw ConfigError("radial_osc grid must lie inside (0, inf)");
            break;
        case RunConfig::Model::edho:
            c.pot = models::edho_potential();
            c.lambda = std::isnan(cfg.lambda) ? models::edho_lambda(0) : cfg.lambda;
            c.grid = cfg.grid_set ? cfg.grid : GridSpec{-6.0, 6.0, 501};
            for (int n = 0; n <= 11; ++n) c.eigenvalues.push_back(models::edho_lambda(n));
            break;
    }
    if (c.grid.n_points < 2) throw ConfigError("grid needs at least 2 points");
    if (!std::isnan(cfg.omega0)) c.omega0 = cfg.omega0;
    else if (c.u.u) c.omega0 = c.K + jordan::w_u_ulambda(c.u, c.x0, c.lambda);
    return c;
}

inline susy::SusyTransform make_transform(const RunConfig& cfg, const Context& c) {
    if (cfg.rep == RunConfig::Rep::vc)
        return susy::make_transform_vc(c.pot, c.lambda, c.u, c.x0, c.omega0,
                                       quad_control(cfg));
    return susy::make_transform_df(c.pot, c.lambda, c.u, c.K, c.u2);
}

/// Regular-at-the-left solution family used as psi at energy eps; when eps
/// is an eigenvalue the normalized eigenfunction is used instead.
inline jordan::SolutionFamily psi_for(const RunConfig& cfg, double eps,
                                      std::string& label) {
    if (cfg.model == RunConfig::Model::box) {
        const double n = std::sqrt(eps) / M_PI;
        if (std::abs(n - std::round(n)) < 1e-9) {
            label = "eigenstate n=" + std::to_string(static_cast<int>(std::round(n)));
            return models::box_eigenfunction();
        }
        label = "regular solution";
        return models::box_u();
    }
    const double n = (eps - 2.0 * cfg.ell - 3.0) / 4.0;
    if (n >= -1e-9 && std::abs(n - std::round(n)) < 1e-9) {
        label = "eigenstate n=" + std::to_string(static_cast<int>(std::round(n)));
        return models::rosc_eigenfunction(cfg.ell, static_cast<int>(std::round(n)));
    }
    label = "regular solution";
    return models::rosc_u(cfg.ell);
}

inline std::vector<double> partner_energies(const RunConfig& cfg, const Context& c) {
    if (!cfg.epsilons.empty()) return cfg.epsilons;
    std::vector<double> all = c.eigenvalues;
    const bool lambda_is_eigen =
        std::any_of(all.begin(), all.end(),
                    [&](double e) { return susy::energies_equal(e, c.lambda); });
    if (!lambda_is_eigen) all.push_back(c.lambda); // new level created at lambda
    std::sort(all.begin(), all.end());
    if (static_cast<int>(all.size()) > cfg.n_states) all.resize(cfg.n_states);
    return all;
}

inline const char* boundary_name(susy::BoundaryClass b) {
    switch (b) {
        case susy::BoundaryClass::vanishes_left: return "vanishes_left";
        case susy::BoundaryClass::vanishes_right: return "vanishes_right";
        case susy::BoundaryClass::both: return "both";
        default: return "neither";
    }
}

inline std::string default_out(const RunConfig& cfg, const std::string& stem) {
    if (!cfg.out.empty()) return cfg.out;
    return stem + (cfg.format == RunConfig::Format::csv ? ".csv" : ".json");
}

} // namespace detail

/// Partner potential and transformed states on a grid, CSV/JSON output with
/// a JSON sidecar holding the parameters, the admissible K-range, and the
/// per-state Schrödinger residuals. Exit 2 when K is irregular and --force
/// was not given.
inline int cmd_partner(const RunConfig& cfg, std::ostream& os = std::cout,
                       std::ostream& err = std::cerr) {
    if (cfg.model == RunConfig::Model::edho)
        throw ConfigError("partner: edho has an energy-dependent potential; "
                          "only norm/integrate/verify apply");
    const auto c = detail::resolve(cfg);
    auto tr = detail::make_transform(cfg, c);

    const auto reg = susy::check_regular(tr, GridSpec{c.grid.x_min, c.grid.x_max, 257});
    const auto range = susy::regularity_range(tr);
    if (!reg.regular && !cfg.force) {
        err << "partner: irregular transformation (Wronskian zero";
        if (reg.zero_location) err << " near x = " << io::format_double(*reg.zero_location);
        err << "); admissible K: " << range.admissible_K.str()
            << "; rerun with --force to emit anyway\n";
        return 2;
    }

    // under --force a singular transform is sampled anyway; points at a
    // Wronskian node come out as NaN rather than aborting the run
    auto guarded = [&](auto&& f, double x) -> double {
        try {
            return f(x);
        } catch (const WronskianZero&) {
            if (!cfg.force) throw;
            return std::numeric_limits<double>::quiet_NaN();
        }
    };

    const std::vector<double> xs = linspace(c.grid);
    GridSeries series;
    series.x = xs;
    std::vector<double> vt(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        vt[i] = guarded([&](double x) { return susy::partner_potential(tr, x); }, xs[i]);
    series.add_column("V_partner", std::move(vt));

    const std::vector<double> energies = detail::partner_energies(cfg, c);
    nlohmann::json jstates = nlohmann::json::array();
    const double h = 5e-4;
    for (std::size_t k = 0; k < energies.size(); ++k) {
        const double eps = energies[k];
        std::string label;
        const auto psi = detail::psi_for(cfg, eps, label);
        auto phi = [&](double x) {
            return guarded([&](double t) { return susy::transform_state(tr, psi, eps, t); },
                           x);
        };
        std::vector<double> col(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) col[i] = phi(xs[i]);
        series.add_column("phi_" + std::to_string(k + 1), std::move(col));

        double max_res = 0.0;
        const double lo = std::max(c.grid.x_min, c.pot.x_left) + 2.5 * h;
        const double hi = std::min(c.grid.x_max,
                                   std::isinf(c.pot.x_right) ? c.grid.x_max : c.pot.x_right)
                          - 2.5 * h;
        for (int i = 0; i <= 200; ++i) {
            const double x = lo + (hi - lo) * i / 200.0;
            const double vtx =
                guarded([&](double t) { return susy::partner_potential(tr, t); }, x);
            const double r = deriv2_5pt(phi, x, h) + (eps - vtx) * phi(x);
            if (!std::isfinite(r)) continue; // singular neighborhood under --force
            max_res = std::max(max_res, std::abs(r) / (1.0 + std::abs(eps * phi(x))
                                                       + std::abs(vtx * phi(x))));
        }
        jstates.push_back({{"energy", eps},
                           {"rule", susy::energies_equal(eps, c.lambda) ? "missing" : "phi"},
                           {"psi", label},
                           {"max_residual", max_res}});
    }

    nlohmann::json meta;
    meta["command"] = "partner";
    meta["model"] = model_name(cfg.model);
    if (cfg.model == RunConfig::Model::radial_osc) meta["ell"] = cfg.ell;
    meta["lambda"] = c.lambda;
    meta["representation"] = cfg.rep == RunConfig::Rep::df ? "df" : "vc";
    if (cfg.rep == RunConfig::Rep::df) meta["K"] = c.K;
    else {
        meta["omega0"] = c.omega0;
        meta["x0"] = c.x0;
    }
    meta["regular"] = reg.regular;
    if (reg.zero_location) meta["wronskian_zero"] = *reg.zero_location;
    meta["admissible_K"] = range.admissible_K.str();
    if (range.omega0_valid) meta["admissible_omega0"] = range.admissible_omega0.str();
    meta["boundary_class"] = detail::boundary_name(range.boundary_class);
    meta["grid"] = {{"x_min", c.grid.x_min}, {"x_max", c.grid.x_max},
                    {"n_points", c.grid.n_points}};
    meta["states"] = jstates;
    meta["seed"] = cfg.seed;

    const std::string out = detail::default_out(cfg, "partner");
    if (cfg.format == RunConfig::Format::csv) {
        io::write_csv(out, series);
        meta["csv"] = out;
        io::write_json(out + ".json", meta);
    } else {
        meta["data"] = io::series_to_json(series);
        io::write_json(out, meta);
    }
    os << "partner: wrote " << out << " (" << series.columns.size() << " columns, "
       << xs.size() << " rows)\n";
    for (const auto& s : jstates)
        os << "  state energy=" << io::format_double(s["energy"].get<double>())
           << " rule=" << s["rule"].get<std::string>()
           << " max_residual=" << s["max_residual"].get<double>() << "\n";
    return 0;
}

/// Module invariant suite; exit 0 iff every check passes.
inline int cmd_verify(const RunConfig& cfg, std::ostream& os = std::cout) {
    verify::Options opts;
    opts.seed = cfg.seed;
    opts.quad_tol = cfg.quad_tol;
    opts.residual_tol = cfg.residual_tol;
    opts.series_tol = cfg.series_tol;
    if (cfg.model_set) opts.model = model_name(cfg.model);
    const auto results = verify::run_all(opts);
    int failures = 0;
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& r : results) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-46s max_err=%-13.4e tol=%-9.1e %s",
                      r.name.c_str(), r.max_error, r.tolerance, r.pass ? "PASS" : "FAIL");
        os << line << "\n";
        if (!r.pass) ++failures;
        jr.push_back({{"name", r.name}, {"model", r.model}, {"max_error", r.max_error},
                      {"tolerance", r.tolerance}, {"pass", r.pass}});
    }
    os << results.size() << " checks, " << failures << " failed (seed " << cfg.seed << ")\n";
    if (!cfg.out.empty())
        io::write_json(cfg.out, {{"command", "verify"}, {"seed", cfg.seed},
                                 {"failures", failures}, {"checks", jr}});
    return failures == 0 ? 0 : 1;
}

/// Normalization of a bound state by both routes (Wronskian endpoint limits
/// and direct quadrature), printed side by side.
inline int cmd_norm(const RunConfig& cfg, std::ostream& os = std::cout) {
    nlohmann::json meta;
    meta["command"] = "norm";
    meta["model"] = model_name(cfg.model);
    const QuadControl qc = detail::quad_control(cfg);
    if (cfg.model == RunConfig::Model::box) {
        const int n = cfg.n_index < 0 ? 1 : cfg.n_index;
        if (n < 1) throw ConfigError("box states are indexed n >= 1");
        const double eps = models::box_eigenvalue(n);
        const auto fam = models::box_u(); // amplitude 1; A follows from the norm
        const auto pot = models::box_potential();
        const auto nw = wronskid::norm_energy(fam, pot, eps);
        const auto nq = wronskid::norm_energy_quadrature(fam, pot, eps, qc);
        const double A = 1.0 / std::sqrt(nw.value);
        os << "model: box  n: " << n << "  lambda: " << io::format_double(eps) << "\n";
        os << "norm (wronskian limits): " << io::format_double(nw.value) << "\n";
        os << "norm (quadrature):       " << io::format_double(nq.value) << "\n";
        os << "difference:              " << io::format_double(std::abs(nw.value - nq.value))
           << "\n";
        os << "amplitude A = 1/sqrt(N): " << io::format_double(A) << "\n";
        meta["n"] = n;
        meta["lambda"] = eps;
        meta["norm_wronskian"] = nw.value;
        meta["norm_quadrature"] = nq.value;
        meta["difference"] = std::abs(nw.value - nq.value);
        meta["A"] = A;
    } else if (cfg.model == RunConfig::Model::edho) {
        const int n = cfg.n_index < 0 ? 0 : cfg.n_index;
        const double lam = models::edho_lambda(n);
        const auto fam = models::edho_state(n);
        const auto pot = models::edho_potential();
        const auto nw = wronskid::norm_energy(fam, pot, lam);
        const auto nq = wronskid::norm_energy_quadrature(fam, pot, lam, qc);
        os << "model: edho  n: " << n << "  lambda: " << io::format_double(lam) << "\n";
        os << "norm (wronskian limits): " << io::format_double(nw.value) << "\n";
        os << "norm (quadrature):       " << io::format_double(nq.value) << "\n";
        os << "difference:              " << io::format_double(std::abs(nw.value - nq.value))
           << "\n";
        os << "left limit:              " << io::format_double(nw.left_limit) << "\n";
        os << "right limit:             " << io::format_double(nw.right_limit) << "\n";
        meta["n"] = n;
        meta["lambda"] = lam;
        meta["norm_wronskian"] = nw.value;
        meta["norm_quadrature"] = nq.value;
        meta["difference"] = std::abs(nw.value - nq.value);
        meta["left_limit"] = nw.left_limit;
        meta["right_limit"] = nw.right_limit;
    } else {
        const int n = cfg.n_index < 0 ? 0 : cfg.n_index;
        const double eps = models::rosc_eigenvalue(cfg.ell, n);
        const auto fam = models::rosc_eigenfunction(cfg.ell, n);
        const auto pot = models::rosc_potential(cfg.ell);
        const auto nq = wronskid::norm_energy_quadrature(fam, pot, eps, qc);
        os << "model: radial_osc  ell: " << cfg.ell << "  n: " << n
           << "  lambda: " << io::format_double(eps) << "\n";
        os << "norm (quadrature):       " << io::format_double(nq.value) << "\n";
        os << "norm (wronskian limits): unavailable at an eigenvalue (the energy\n"
           << "  derivative hits the series parameter pole); use the general-lambda\n"
           << "  family with `integrate` instead\n";
        meta["ell"] = cfg.ell;
        meta["n"] = n;
        meta["lambda"] = eps;
        meta["norm_quadrature"] = nq.value;
        meta["norm_wronskian"] = nullptr;
    }
    if (!cfg.out.empty()) io::write_json(cfg.out, meta);
    return 0;
}

/// Int_{x0}^{x} u^2 (weighted by 1 - V_lambda where applicable) by the
/// Wronskian identity and by adaptive quadrature.
inline int cmd_integrate(const RunConfig& cfg, std::ostream& os = std::cout) {
    const QuadControl qc = detail::quad_control(cfg);
    jordan::SolutionFamily fam;
    jordan::EnergyPotential pot;
    double lam = cfg.lambda;
    double x0 = cfg.x0, x1 = cfg.x_to;
    if (cfg.model == RunConfig::Model::box) {
        pot = models::box_potential();
        fam = cfg.family == "u2" ? models::box_u2() : models::box_u();
        if (std::isnan(lam)) lam = M_PI * M_PI;
        if (std::isnan(x0)) x0 = 0.0;
        if (std::isnan(x1)) x1 = 0.5;
    } else if (cfg.model == RunConfig::Model::radial_osc) {
        pot = models::rosc_potential(cfg.ell);
        fam = cfg.family == "u2" ? models::rosc_u2(cfg.ell) : models::rosc_u(cfg.ell);
        if (std::isnan(lam)) lam = 8.0;
        if (std::isnan(x0)) x0 = 0.5;
        if (std::isnan(x1)) x1 = 1.5;
    } else {
        pot = models::edho_potential();
        const int n = cfg.n_index < 0 ? 0 : cfg.n_index;
        fam = models::edho_state(n);
        if (std::isnan(lam)) lam = models::edho_lambda(n);
        if (std::isnan(x0)) x0 = -2.0;
        if (std::isnan(x1)) x1 = 2.0;
    }
    const double w = wronskid::integrate_u2_energy(fam, pot, x0, x1, lam);
    const double q = integrate([&](double t) {
        const double u = fam.u(t, lam);
        return (1.0 - pot.vl(t, lam)) * u * u;
    }, x0, x1, qc);
    os << "model: " << model_name(cfg.model) << "  family: " << cfg.family
       << "  lambda: " << io::format_double(lam) << "  range: ["
       << io::format_double(x0) << ", " << io::format_double(x1) << "]\n";
    os << "integral (wronskian identity): " << io::format_double(w) << "\n";
    os << "integral (quadrature):         " << io::format_double(q) << "\n";
    os << "difference:                    " << io::format_double(std::abs(w - q)) << "\n";
    if (!cfg.out.empty())
        io::write_json(cfg.out,
                       {{"command", "integrate"}, {"model", model_name(cfg.model)},
                        {"family", cfg.family}, {"lambda", lam}, {"x0", x0}, {"x", x1},
                        {"wronskian", w}, {"quadrature", q},
                        {"difference", std::abs(w - q)}});
    return 0;
}

/// Endpoint analysis of the transformation Wronskian, the admissible ranges
/// of the free constants, and the regularity of the configured transform.
inline int cmd_regularity(const RunConfig& cfg, std::ostream& os = std::cout) {
    if (cfg.model == RunConfig::Model::edho)
        throw ConfigError("regularity: edho has an energy-dependent potential; "
                          "only norm/integrate/verify apply");
    const auto c = detail::resolve(cfg);
    auto tr = detail::make_transform(cfg, c);
    const auto rep = susy::regularity_range(tr);
    const auto chk = susy::check_regular(tr, GridSpec{c.grid.x_min, c.grid.x_max, 257});

    auto limit_str = [](const EndpointLimit& l) {
        if (l.diverged()) return std::string("diverges");
        if (!l.converged()) return std::string("unresolved");
        return io::format_double(l.value);
    };
    os << "model: " << model_name(cfg.model) << "  lambda: " << io::format_double(c.lambda)
       << "\n";
    os << "W_{u,u_lambda} limits: left = " << limit_str(rep.w_left)
       << ", right = " << limit_str(rep.w_right) << "\n";
    os << "u endpoint behavior:   " << detail::boundary_name(rep.boundary_class) << "\n";
    os << "admissible K:          " << rep.admissible_K.str() << "\n";
    if (rep.omega0_valid)
        os << "admissible omega0:     " << rep.admissible_omega0.str()
           << "  (x0 = " << io::format_double(c.x0) << ")\n";
    os << "configured "
       << (cfg.rep == RunConfig::Rep::df ? "K = " + io::format_double(c.K)
                                         : "omega0 = " + io::format_double(c.omega0))
       << ": " << (chk.regular ? "regular" : "irregular");
    if (chk.zero_location)
        os << ", Wronskian zero near x = " << io::format_double(*chk.zero_location);
    os << "\n";

    if (!cfg.out.empty()) {
        nlohmann::json meta;
        meta["command"] = "regularity";
        meta["model"] = model_name(cfg.model);
        meta["lambda"] = c.lambda;
        meta["w_left"] = rep.w_left.converged() ? nlohmann::json(rep.w_left.value)
                                                : nlohmann::json(limit_str(rep.w_left));
        meta["w_right"] = rep.w_right.converged() ? nlohmann::json(rep.w_right.value)
                                                  : nlohmann::json(limit_str(rep.w_right));
        meta["admissible_K"] = rep.admissible_K.str();
        meta["K_left_max"] = rep.admissible_K.has_left ? nlohmann::json(rep.admissible_K.left_max)
                                                       : nlohmann::json();
        meta["K_right_min"] = rep.admissible_K.has_right
                                  ? nlohmann::json(rep.admissible_K.right_min)
                                  : nlohmann::json();
        if (rep.omega0_valid) meta["admissible_omega0"] = rep.admissible_omega0.str();
        meta["boundary_class"] = detail::boundary_name(rep.boundary_class);
        meta["regular"] = chk.regular;
        if (chk.zero_location) meta["wronskian_zero"] = *chk.zero_location;
        io::write_json(cfg.out, meta);
    }
    return 0;
}

} // namespace csusy::cli
