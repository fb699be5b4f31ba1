#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "csusy/errors.hpp"
#include "csusy/grid.hpp"
#include "csusy/quadrature.hpp"

namespace csusy::jordan {

/// Potential V(x, lambda) with its energy derivative on an open interval.
/// An empty v_lambda means the potential is energy-independent: the
/// derivative is exactly zero, not a near-zero evaluation.
struct EnergyPotential {
    std::function<double(double, double)> v;
    std::function<double(double, double)> v_lambda;
    double x_left = -std::numeric_limits<double>::infinity();
    double x_right = std::numeric_limits<double>::infinity();

    bool energy_dependent() const { return static_cast<bool>(v_lambda); }
    double vl(double x, double lambda) const { return v_lambda ? v_lambda(x, lambda) : 0.0; }
};

enum class Provenance { closed_form, numeric_ode, derived };

/// A solution u(x, lambda) of u_xx + (lambda - V) u = 0 together with its
/// position and energy derivatives.
struct SolutionFamily {
    std::function<double(double, double)> u;
    std::function<double(double, double)> u_x;
    std::function<double(double, double)> u_lambda;
    std::function<double(double, double)> u_lambda_x;
    Provenance provenance = Provenance::closed_form;
    double fd_step_lambda = 0.0;
};

/// W_{u, u_lambda}(x, lambda) = u (u_lambda)_x - u_lambda u_x.
inline double w_u_ulambda(const SolutionFamily& f, double x, double lambda) {
    return f.u(x, lambda) * f.u_lambda_x(x, lambda) - f.u_lambda(x, lambda) * f.u_x(x, lambda);
}

/// Pointwise combination c1*f1 + c2*f2 of two families (all accessors).
inline SolutionFamily combine(const SolutionFamily& f1, const SolutionFamily& f2,
                              double c1 = 1.0, double c2 = 1.0) {
    auto mix = [c1, c2](std::function<double(double, double)> a,
                        std::function<double(double, double)> b) {
        return [c1, c2, a = std::move(a), b = std::move(b)](double x, double lam) {
            return c1 * a(x, lam) + c2 * b(x, lam);
        };
    };
    SolutionFamily s;
    s.u = mix(f1.u, f2.u);
    s.u_x = mix(f1.u_x, f2.u_x);
    s.u_lambda = mix(f1.u_lambda, f2.u_lambda);
    s.u_lambda_x = mix(f1.u_lambda_x, f2.u_lambda_x);
    s.provenance = Provenance::derived;
    return s;
}

namespace detail {

/// Tabulates u on [a, b] and rejects paths where u changes sign or drops
/// below 1e-12 of its scale. The reduction-of-order integrand is genuinely
/// singular at nodes of u, so fail loudly instead of integrating through.
inline void require_zero_free(const SolutionFamily& fam, double a, double b, double lambda,
                              int samples = 65) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    std::vector<double> vals(static_cast<std::size_t>(samples));
    double maxabs = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = a + (b - a) * i / (samples - 1);
        vals[static_cast<std::size_t>(i)] = fam.u(x, lambda);
        maxabs = std::max(maxabs, std::abs(vals[static_cast<std::size_t>(i)]));
    }
    const double floor = 1e-12 * std::max(1.0, maxabs);
    for (int i = 0; i < samples; ++i) {
        if (std::abs(vals[static_cast<std::size_t>(i)]) < floor)
            throw SingularIntegrand("u vanishes on the integration path");
        if (i > 0 && std::signbit(vals[static_cast<std::size_t>(i)])
                         != std::signbit(vals[static_cast<std::size_t>(i - 1)]))
            throw SingularIntegrand("u changes sign on the integration path");
    }
}

} // namespace detail

/// Second linearly independent solution by reduction of order:
///   u2(x) = u(x) * Int_{x0}^{x} u(t)^{-2} dt,  with W_{u, u2} = 1.
/// The caller must choose x0 inside a zero-free subinterval of u.
inline SolutionFamily second_solution(const SolutionFamily& fam, double x0,
                                      QuadControl qc = {}) {
    auto path_integral = [fam, x0, qc](double x, double lam,
                                       const std::function<double(double)>& integrand) {
        detail::require_zero_free(fam, x0, x, lam);
        return integrate(integrand, x0, x, qc);
    };
    auto I = [fam, path_integral](double x, double lam) {
        return path_integral(x, lam, [&fam, lam](double t) {
            const double ut = fam.u(t, lam);
            return 1.0 / (ut * ut);
        });
    };
    auto J = [fam, path_integral](double x, double lam) {
        return path_integral(x, lam, [&fam, lam](double t) {
            const double ut = fam.u(t, lam);
            return -2.0 * fam.u_lambda(t, lam) / (ut * ut * ut);
        });
    };
    SolutionFamily s;
    s.provenance = Provenance::derived;
    s.fd_step_lambda = fam.fd_step_lambda;
    s.u = [fam, I](double x, double lam) { return fam.u(x, lam) * I(x, lam); };
    s.u_x = [fam, I](double x, double lam) {
        return fam.u_x(x, lam) * I(x, lam) + 1.0 / fam.u(x, lam);
    };
    s.u_lambda = [fam, I, J](double x, double lam) {
        return fam.u_lambda(x, lam) * I(x, lam) + fam.u(x, lam) * J(x, lam);
    };
    s.u_lambda_x = [fam, I, J](double x, double lam) {
        const double u = fam.u(x, lam);
        return fam.u_lambda_x(x, lam) * I(x, lam) + fam.u_x(x, lam) * J(x, lam)
               - fam.u_lambda(x, lam) / (u * u);
    };
    return s;
}

/// Variation-of-constants solution of the driven chain equation on a fixed
/// window, with v(x0) = v'(x0) = 0:
///   v(x) = -u(x) * Int_{x0}^{x} [ Int_{x0}^{t} u^2 (1 - V_lambda) ds ] u(t)^{-2} dt.
/// The inner antiderivative is pre-tabulated on a refinement of the outer
/// nodes, so grid sweeps stay close to linear cost.
class VvcEvaluator {
public:
    VvcEvaluator(SolutionFamily fam, EnergyPotential pot, double x0, double lo, double hi,
                 double lambda, QuadControl qc = {}, int segments = 256)
        : fam_(std::move(fam)), lambda_(lambda) {
        lo = std::min(lo, x0);
        hi = std::max(hi, x0);
        detail::require_zero_free(fam_, lo, hi, lambda_);
        auto u2w = [f = fam_, p = std::move(pot), lambda](double t) {
            const double ut = f.u(t, lambda);
            return ut * ut * (1.0 - p.vl(t, lambda));
        };
        g_ = std::make_shared<CumulativeAntiderivative>(u2w, x0, lo, hi, segments, qc);
        auto outer = [f = fam_, g = g_, lambda](double t) {
            const double ut = f.u(t, lambda);
            return (*g)(t) / (ut * ut);
        };
        f_ = std::make_shared<CumulativeAntiderivative>(outer, x0, lo, hi, segments, qc);
    }

    double v(double x) const { return -fam_.u(x, lambda_) * (*f_)(x); }

    double v_x(double x) const {
        return -fam_.u_x(x, lambda_) * (*f_)(x) - (*g_)(x) / fam_.u(x, lambda_);
    }

    /// Inner antiderivative Int_{x0}^{x} u^2 (1 - V_lambda) dt.
    double inner(double x) const { return (*g_)(x); }

    /// Outer double integral Int_{x0}^{x} inner(t)/u^2 dt.
    double outer(double x) const { return (*f_)(x); }

private:
    SolutionFamily fam_;
    double lambda_;
    std::shared_ptr<CumulativeAntiderivative> g_;
    std::shared_ptr<CumulativeAntiderivative> f_;
};

/// Pointwise v_VC; builds a window evaluator per call.
inline double v_vc(const SolutionFamily& fam, const EnergyPotential& pot, double x0, double x,
                   double lambda, const QuadControl& qc = {}) {
    if (x == x0) return 0.0;
    VvcEvaluator ev(fam, pot, x0, std::min(x0, x), std::max(x0, x), lambda, qc);
    return ev.v(x);
}

/// Pointwise derivative of v_VC in x.
inline double v_vc_x(const SolutionFamily& fam, const EnergyPotential& pot, double x0, double x,
                     double lambda, const QuadControl& qc = {}) {
    if (x == x0) return 0.0;
    VvcEvaluator ev(fam, pot, x0, std::min(x0, x), std::max(x0, x), lambda, qc);
    return ev.v_x(x);
}

/// Differential-formula solution of the driven chain equation: v_DF = u_lambda.
inline double v_df(const SolutionFamily& fam, double x, double lambda) {
    return fam.u_lambda(x, lambda);
}

inline double v_df_x(const SolutionFamily& fam, double x, double lambda) {
    return fam.u_lambda_x(x, lambda);
}

/// Constants d1, d2 with d1 u1 + d2 u2 = v_DF - v_VC on the zero-free window.
struct ConnectionCoeffs {
    double d1 = 0.0;
    double d2 = 0.0;
    double base_point = 0.0;
};

/// Reduced Wronskian form, valid because v_VC based at x0 has
/// v_VC(x0) = v_VC'(x0) = 0:  d1 = W_{v_DF, u2}(x0), d2 = W_{u1, v_DF}(x0).
/// Requires W_{u1,u2}(x0) = 1 within wronskian_tol.
inline ConnectionCoeffs connection_coeffs(const SolutionFamily& u1, const SolutionFamily& u2,
                                          double x0, double lambda,
                                          double wronskian_tol = 1e-6) {
    const double w12 = u1.u(x0, lambda) * u2.u_x(x0, lambda)
                     - u2.u(x0, lambda) * u1.u_x(x0, lambda);
    if (std::abs(w12 - 1.0) > wronskian_tol)
        throw WronskianNotUnit("connection_coeffs: W_{u1,u2} differs from 1 at x0");
    const double vdf = u1.u_lambda(x0, lambda);
    const double vdf_x = u1.u_lambda_x(x0, lambda);
    ConnectionCoeffs c;
    c.base_point = x0;
    c.d1 = vdf * u2.u_x(x0, lambda) - u2.u(x0, lambda) * vdf_x;
    c.d2 = u1.u(x0, lambda) * vdf_x - vdf * u1.u_x(x0, lambda);
    return c;
}

/// General Wronskian form evaluated at an arbitrary point eval_x with the
/// v_VC base kept at x0:  d1 = W_{v_DF - v_VC, u2}(eval_x),
/// d2 = W_{u1, v_DF - v_VC}(eval_x). The difference v_DF - v_VC solves the
/// homogeneous equation, so the result must not depend on eval_x.
inline ConnectionCoeffs connection_coeffs_general(const SolutionFamily& u1,
                                                  const SolutionFamily& u2,
                                                  const EnergyPotential& pot, double x0,
                                                  double eval_x, double lambda,
                                                  const QuadControl& qc = {},
                                                  double wronskian_tol = 1e-6) {
    const double w12 = u1.u(eval_x, lambda) * u2.u_x(eval_x, lambda)
                     - u2.u(eval_x, lambda) * u1.u_x(eval_x, lambda);
    if (std::abs(w12 - 1.0) > wronskian_tol)
        throw WronskianNotUnit("connection_coeffs_general: W_{u1,u2} differs from 1");
    VvcEvaluator vv(u1, pot, x0, std::min(x0, eval_x), std::max(x0, eval_x), lambda, qc);
    const double r = u1.u_lambda(eval_x, lambda) - vv.v(eval_x);
    const double r_x = u1.u_lambda_x(eval_x, lambda) - vv.v_x(eval_x);
    ConnectionCoeffs c;
    c.base_point = x0;
    c.d1 = r * u2.u_x(eval_x, lambda) - u2.u(eval_x, lambda) * r_x;
    c.d2 = u1.u(eval_x, lambda) * r_x - r * u1.u_x(eval_x, lambda);
    return c;
}

/// Jordan-chain pair (u, v) tagged by the representation of v.
enum class Representation { vc, df };

struct JordanPair {
    SolutionFamily family;
    std::function<double(double, double)> v;
    std::function<double(double, double)> v_x;
    Representation representation = Representation::df;
    double base_point = 0.0; // VC anchor x0
    double constant = 0.0;   // DF homogeneous constant K
};

/// DF pair: v = u_lambda + K * u2 with u2 a unit-Wronskian partner of u,
/// so that W_{u,v} = K + W_{u,u_lambda}.
inline JordanPair make_pair_df(const SolutionFamily& fam, double K,
                               const SolutionFamily& u2) {
    JordanPair p;
    p.family = fam;
    p.representation = Representation::df;
    p.constant = K;
    p.v = [fam, u2, K](double x, double lam) {
        return fam.u_lambda(x, lam) + K * u2.u(x, lam);
    };
    p.v_x = [fam, u2, K](double x, double lam) {
        return fam.u_lambda_x(x, lam) + K * u2.u_x(x, lam);
    };
    return p;
}

/// VC pair anchored at x0 (v and v' vanish there).
inline JordanPair make_pair_vc(const SolutionFamily& fam, const EnergyPotential& pot,
                               double x0, QuadControl qc = {}) {
    JordanPair p;
    p.family = fam;
    p.representation = Representation::vc;
    p.base_point = x0;
    p.v = [fam, pot, x0, qc](double x, double lam) { return v_vc(fam, pot, x0, x, lam, qc); };
    p.v_x = [fam, pot, x0, qc](double x, double lam) {
        return v_vc_x(fam, pot, x0, x, lam, qc);
    };
    return p;
}

namespace detail {

struct OdeTable {
    std::vector<double> x, u, ux, uxx;
};

inline OdeTable rk4_solve(const EnergyPotential& pot, double lambda, double x_init,
                          double u_init, double ux_init, const GridSpec& grid, int substeps) {
    const std::vector<double> xs = linspace(grid);
    if (x_init < grid.x_min || x_init > grid.x_max)
        throw Error("solve_u_numeric: x_init outside the grid");
    OdeTable tab;
    tab.x = xs;
    const std::size_t n = xs.size();
    tab.u.assign(n, 0.0);
    tab.ux.assign(n, 0.0);
    tab.uxx.assign(n, 0.0);

    auto accel = [&](double x, double u) { return (pot.v(x, lambda) - lambda) * u; };
    auto rk4_span = [&](double x0, double x1, double& u, double& w) {
        const double len = x1 - x0;
        if (len == 0.0) return;
        const int steps = std::max(1, substeps);
        const double h = len / steps;
        double x = x0;
        for (int s = 0; s < steps; ++s) {
            const double k1u = w, k1w = accel(x, u);
            const double k2u = w + 0.5 * h * k1w, k2w = accel(x + 0.5 * h, u + 0.5 * h * k1u);
            const double k3u = w + 0.5 * h * k2w, k3w = accel(x + 0.5 * h, u + 0.5 * h * k2u);
            const double k4u = w + h * k3w, k4w = accel(x + h, u + h * k3u);
            u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
            w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
            x += h;
            if (!std::isfinite(u) || !std::isfinite(w))
                throw StepFailure("solve_u_numeric: NaN/overflow during integration");
        }
    };

    // first node at or right of x_init
    std::size_t start = 0;
    while (start + 1 < n && xs[start] < x_init) ++start;

    double u = u_init, w = ux_init;
    rk4_span(x_init, xs[start], u, w);
    tab.u[start] = u;
    tab.ux[start] = w;
    for (std::size_t i = start; i + 1 < n; ++i) {
        rk4_span(xs[i], xs[i + 1], u, w);
        tab.u[i + 1] = u;
        tab.ux[i + 1] = w;
    }
    // backward sweep restarts from the initial data at x_init
    u = u_init;
    w = ux_init;
    rk4_span(x_init, xs[start], u, w);
    for (std::size_t i = start; i > 0; --i) {
        rk4_span(xs[i], xs[i - 1], u, w);
        tab.u[i - 1] = u;
        tab.ux[i - 1] = w;
    }
    for (std::size_t i = 0; i < n; ++i) tab.uxx[i] = accel(xs[i], tab.u[i]);
    return tab;
}

// cubic Hermite using values and slopes at the bracketing nodes
inline double hermite_eval(const std::vector<double>& xs, const std::vector<double>& f,
                           const std::vector<double>& fp, double x) {
    const std::size_t n = xs.size();
    if (x <= xs.front()) return f.front() + (x - xs.front()) * fp.front();
    if (x >= xs.back()) return f.back() + (x - xs.back()) * fp.back();
    const double h = (xs.back() - xs.front()) / static_cast<double>(n - 1);
    std::size_t k = std::min(n - 2, static_cast<std::size_t>((x - xs.front()) / h));
    if (x < xs[k] && k > 0) --k;
    if (x > xs[k + 1] && k + 2 < n) ++k;
    const double hk = xs[k + 1] - xs[k];
    const double t = (x - xs[k]) / hk;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * f[k] + (t3 - 2 * t2 + t) * hk * fp[k]
         + (-2 * t3 + 3 * t2) * f[k + 1] + (t3 - t2) * hk * fp[k + 1];
}

struct NumericSolution {
    EnergyPotential pot;
    double lambda0 = 0, h_lambda = 0;
    double x_init = 0, u_init = 0, ux_init = 0;
    GridSpec grid;
    int substeps = 4;
    OdeTable base, plus, minus;

    OdeTable solve(double lam) const {
        return rk4_solve(pot, lam, x_init, u_init, ux_init, grid, substeps);
    }
    double eval_u(const OdeTable& t, double x) const { return hermite_eval(t.x, t.u, t.ux, x); }
    double eval_ux(const OdeTable& t, double x) const {
        return hermite_eval(t.x, t.ux, t.uxx, x);
    }
};

} // namespace detail

struct NumericSolveOptions {
    double fd_step_lambda = 0.0; // 0 -> 1e-5 * max(1, |lambda|)
    int substeps = 4;            // RK4 substeps per grid interval
};

/// Fixed-step RK4 solution of the chain's first equation; u_lambda comes from
/// re-solving at lambda ± h and differencing. Evaluation at a lambda other
/// than the construction value re-solves the ODE on demand.
inline SolutionFamily solve_u_numeric(const EnergyPotential& pot, double lambda, double x_init,
                                      double u_init, double ux_init, const GridSpec& grid,
                                      NumericSolveOptions opts = {}) {
    auto sol = std::make_shared<detail::NumericSolution>();
    sol->pot = pot;
    sol->lambda0 = lambda;
    sol->h_lambda = opts.fd_step_lambda > 0 ? opts.fd_step_lambda
                                            : 1e-5 * std::max(1.0, std::abs(lambda));
    sol->x_init = x_init;
    sol->u_init = u_init;
    sol->ux_init = ux_init;
    sol->grid = grid;
    sol->substeps = opts.substeps;
    sol->base = sol->solve(lambda);
    sol->plus = sol->solve(lambda + sol->h_lambda);
    sol->minus = sol->solve(lambda - sol->h_lambda);

    auto pick = [sol](double lam, auto&& eval) -> double {
        if (lam == sol->lambda0) return eval(sol->base);
        if (lam == sol->lambda0 + sol->h_lambda) return eval(sol->plus);
        if (lam == sol->lambda0 - sol->h_lambda) return eval(sol->minus);
        const detail::OdeTable fresh = sol->solve(lam);
        return eval(fresh);
    };

    SolutionFamily fam;
    fam.provenance = Provenance::numeric_ode;
    fam.fd_step_lambda = sol->h_lambda;
    fam.u = [sol, pick](double x, double lam) {
        return pick(lam, [&](const detail::OdeTable& t) { return sol->eval_u(t, x); });
    };
    fam.u_x = [sol, pick](double x, double lam) {
        return pick(lam, [&](const detail::OdeTable& t) { return sol->eval_ux(t, x); });
    };
    fam.u_lambda = [sol](double x, double lam) {
        if (lam == sol->lambda0)
            return (sol->eval_u(sol->plus, x) - sol->eval_u(sol->minus, x))
                   / (2.0 * sol->h_lambda);
        const detail::OdeTable p = sol->solve(lam + sol->h_lambda);
        const detail::OdeTable m = sol->solve(lam - sol->h_lambda);
        return (sol->eval_u(p, x) - sol->eval_u(m, x)) / (2.0 * sol->h_lambda);
    };
    fam.u_lambda_x = [sol](double x, double lam) {
        if (lam == sol->lambda0)
            return (sol->eval_ux(sol->plus, x) - sol->eval_ux(sol->minus, x))
                   / (2.0 * sol->h_lambda);
        const detail::OdeTable p = sol->solve(lam + sol->h_lambda);
        const detail::OdeTable m = sol->solve(lam - sol->h_lambda);
        return (sol->eval_ux(p, x) - sol->eval_ux(m, x)) / (2.0 * sol->h_lambda);
    };
    return fam;
}

} // namespace csusy::jordan
