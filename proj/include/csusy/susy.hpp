#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "csusy/errors.hpp"
#include "csusy/jordan.hpp"
#include "csusy/limits.hpp"
#include "csusy/quadrature.hpp"

namespace csusy::susy {

using jordan::EnergyPotential;
using jordan::JordanPair;
using jordan::Representation;
using jordan::SolutionFamily;

/// W_{f,g}(x) = f g' - g f' from the four evaluators.
inline double wronskian(const std::function<double(double)>& f,
                        const std::function<double(double)>& f_x,
                        const std::function<double(double)>& g,
                        const std::function<double(double)>& g_x, double x) {
    return f(x) * g_x(x) - g(x) * f_x(x);
}

inline double wronskian(double f, double f_x, double g, double g_x) {
    return f * g_x - g * f_x;
}

/// One confluent transformation: factorization energy, Jordan pair, and the
/// free constant of the chosen representation (K for DF, omega0 for VC).
/// The potential must be energy-independent.
struct SusyTransform {
    EnergyPotential pot;
    double lambda = 0.0;
    JordanPair pair;
    double free_constant = 0.0; // K (DF) or omega0 (VC)
    Representation representation = Representation::df;
    double x0 = 0.0;            // VC anchor
    QuadControl quad{};
};

inline SusyTransform make_transform_df(const EnergyPotential& pot, double lambda,
                                       const SolutionFamily& fam, double K,
                                       const SolutionFamily& u2) {
    if (pot.energy_dependent())
        throw ConfigError("confluent transform requires an energy-independent potential");
    SusyTransform t;
    t.pot = pot;
    t.lambda = lambda;
    t.pair = jordan::make_pair_df(fam, K, u2);
    t.free_constant = K;
    t.representation = Representation::df;
    return t;
}

inline SusyTransform make_transform_vc(const EnergyPotential& pot, double lambda,
                                       const SolutionFamily& fam, double x0, double omega0,
                                       QuadControl qc = {}) {
    if (pot.energy_dependent())
        throw ConfigError("confluent transform requires an energy-independent potential");
    SusyTransform t;
    t.pot = pot;
    t.lambda = lambda;
    t.pair = jordan::make_pair_vc(fam, pot, x0, qc);
    t.free_constant = omega0;
    t.representation = Representation::vc;
    t.x0 = x0;
    t.quad = qc;
    return t;
}

/// Differential representation of the transformation Wronskian:
///   W_{u,v}(x) = K + W_{u, u_lambda}(x).
inline double wronskian_df(const SusyTransform& t, double x) {
    return t.free_constant + jordan::w_u_ulambda(t.pair.family, x, t.lambda);
}

/// Integral representation: W_{u,v}(x) = omega0 - Int_{x0}^{x} u^2 dt.
inline double wronskian_vc(const SusyTransform& t, double x0, double x) {
    const auto& fam = t.pair.family;
    const double lam = t.lambda;
    return t.free_constant
           - integrate([&fam, lam](double s) {
                 const double u = fam.u(s, lam);
                 return u * u;
             }, x0, x, t.quad);
}

/// Transformation Wronskian in the transform's active representation.
inline double active_wronskian(const SusyTransform& t, double x) {
    if (t.representation == Representation::df) return wronskian_df(t, x);
    return wronskian_vc(t, t.x0, x);
}

inline double wronskian_zero_threshold(const SusyTransform& t) {
    return 1e-12 * (1.0 + std::abs(t.free_constant));
}

/// Partner potential V + (4 u u_x W + 2 u^4)/W^2, algebraically equal to
/// V - 2 (log|W|)'' given W' = -u^2.
inline double partner_potential(const SusyTransform& t, double x) {
    const double W = active_wronskian(t, x);
    if (std::abs(W) < wronskian_zero_threshold(t))
        throw WronskianZero("partner_potential: transformation Wronskian vanishes");
    const auto& fam = t.pair.family;
    const double u = fam.u(x, t.lambda);
    const double ux = fam.u_x(x, t.lambda);
    return t.pot.v(x, t.lambda) + (4.0 * u * ux * W + 2.0 * u * u * u * u) / (W * W);
}

inline bool energies_equal(double eps, double lambda) {
    return std::abs(eps - lambda) <= 1e-12 * (1.0 + std::abs(lambda));
}

/// State transformation. For eps != lambda,
///   phi = u^2 psi_x / W + [lambda - eps - u u_x / W] psi;
/// at the factorization energy the rule degenerates to phi = u / W.
inline double transform_state(const SusyTransform& t, const SolutionFamily& psi, double eps,
                              double x) {
    const double W = active_wronskian(t, x);
    if (std::abs(W) < wronskian_zero_threshold(t))
        throw WronskianZero("transform_state: transformation Wronskian vanishes");
    const auto& fam = t.pair.family;
    const double u = fam.u(x, t.lambda);
    if (energies_equal(eps, t.lambda)) return u / W;
    const double ux = fam.u_x(x, t.lambda);
    return u * u * psi.u_x(x, eps) / W + (t.lambda - eps - u * ux / W) * psi.u(x, eps);
}

enum class BoundaryClass { vanishes_left, vanishes_right, both, neither };

/// Closed-ray description of an admissible constant set:
/// (-inf, left_max] ∪ [right_min, +inf), either ray optional.
struct AdmissibleRays {
    bool has_left = false;
    double left_max = 0.0;
    bool has_right = false;
    double right_min = 0.0;

    bool contains(double k) const {
        return (has_left && k <= left_max) || (has_right && k >= right_min);
    }

    std::string str() const {
        std::ostringstream os;
        os.precision(12);
        if (!has_left && !has_right) return "(empty)";
        if (has_left) os << "(-inf, " << left_max << "]";
        if (has_left && has_right) os << " U ";
        if (has_right) os << "[" << right_min << ", inf)";
        return os.str();
    }
};

/// Endpoint analysis of the transformation Wronskian and the induced
/// admissible ranges of the free constants.
struct RegularityReport {
    EndpointLimit w_left;  // limit of W_{u,u_lambda} at x_left
    EndpointLimit w_right; // limit at x_right
    EndpointLimit u_left;
    EndpointLimit u_right;
    AdmissibleRays admissible_K;
    AdmissibleRays admissible_omega0;
    bool omega0_valid = false;
    double integral_left = std::numeric_limits<double>::quiet_NaN();  // Int_{x_l}^{x0} u^2
    double integral_right = std::numeric_limits<double>::quiet_NaN(); // Int_{x0}^{x_r} u^2
    BoundaryClass boundary_class = BoundaryClass::neither;
};

namespace detail {

inline bool vanishes(const EndpointLimit& l) {
    return l.converged() && std::abs(l.value) <= 1e-8;
}

inline double endpoint_u2_integral(const SolutionFamily& fam, double lambda, double from,
                                   double to, const QuadControl& qc, bool& ok) {
    auto u2 = [&fam, lambda](double s) {
        const double u = fam.u(s, lambda);
        return u * u;
    };
    ok = true;
    try {
        if (std::isinf(from)) return integrate_from_minus_infinity(u2, to, qc);
        if (std::isinf(to)) return integrate_to_infinity(u2, from, qc);
        return integrate(u2, from, to, qc);
    } catch (const Error&) {
        ok = false;
        return std::numeric_limits<double>::quiet_NaN();
    }
}

} // namespace detail

/// Endpoint limits and admissible constants. A ray is available only where
/// the transformation function does not diverge at that endpoint and the
/// Wronskian limit resolves; the constants obey
///   K <= -W(x_left)   and/or   K >= -W(x_right),
///   omega0 <= -I_left and/or   omega0 >= I_right.
inline RegularityReport regularity_range(const SusyTransform& t, LimitControl lc = {}) {
    const auto& fam = t.pair.family;
    const double lam = t.lambda;
    auto wfun = [&fam, lam](double x) { return jordan::w_u_ulambda(fam, x, lam); };
    auto ufun = [&fam, lam](double x) { return fam.u(x, lam); };

    RegularityReport rep;
    rep.w_left = limit_toward(wfun, t.pot.x_left, +1, lc);
    rep.w_right = limit_toward(wfun, t.pot.x_right, -1, lc);
    if (rep.w_left.status == LimitStatus::unresolved
        || rep.w_right.status == LimitStatus::unresolved)
        throw LimitNotResolved("regularity_range: Wronskian endpoint limit failed "
                               "its Cauchy test");
    rep.u_left = limit_toward(ufun, t.pot.x_left, +1, lc);
    rep.u_right = limit_toward(ufun, t.pot.x_right, -1, lc);

    const bool left_ok = !rep.u_left.diverged() && rep.w_left.converged();
    const bool right_ok = !rep.u_right.diverged() && rep.w_right.converged();
    rep.admissible_K.has_left = left_ok;
    if (left_ok) rep.admissible_K.left_max = -rep.w_left.value;
    rep.admissible_K.has_right = right_ok;
    if (right_ok) rep.admissible_K.right_min = -rep.w_right.value;

    const bool lv = detail::vanishes(rep.u_left);
    const bool rv = detail::vanishes(rep.u_right);
    rep.boundary_class = lv && rv ? BoundaryClass::both
                       : lv      ? BoundaryClass::vanishes_left
                       : rv      ? BoundaryClass::vanishes_right
                                 : BoundaryClass::neither;

    // integral-representation ranges, anchored at the transform's x0
    const double x0 = t.representation == Representation::vc ? t.x0
                                                             : t.pair.base_point;
    bool okl = false, okr = false;
    rep.integral_left = detail::endpoint_u2_integral(fam, lam, t.pot.x_left, x0, t.quad, okl);
    rep.integral_right = detail::endpoint_u2_integral(fam, lam, x0, t.pot.x_right, t.quad, okr);
    rep.admissible_omega0.has_left = okl && !rep.u_left.diverged();
    if (rep.admissible_omega0.has_left) rep.admissible_omega0.left_max = -rep.integral_left;
    rep.admissible_omega0.has_right = okr && !rep.u_right.diverged();
    if (rep.admissible_omega0.has_right) rep.admissible_omega0.right_min = rep.integral_right;
    rep.omega0_valid = rep.admissible_omega0.has_left || rep.admissible_omega0.has_right;
    return rep;
}

struct RegularityCheck {
    bool regular = false;
    std::optional<double> zero_location;
};

/// Exploits monotonicity of W (W' = -u^2 <= 0): W is zero-free iff its
/// endpoint limits do not straddle zero; a strict sign change brackets the
/// unique zero, located by bisection. Limits equal to zero count as regular
/// because W vanishes only in the limit at the open endpoint.
inline RegularityCheck check_regular(const SusyTransform& t, const GridSpec& grid,
                                     LimitControl lc = {}) {
    auto W = [&t](double x) { return active_wronskian(t, x); };
    const EndpointLimit wl = limit_toward(W, t.pot.x_left, +1, lc);
    const EndpointLimit wr = limit_toward(W, t.pot.x_right, -1, lc);
    const double sign_tol = 1e-10 * (1.0 + std::abs(t.free_constant));

    RegularityCheck out;
    // inconclusive endpoint behavior is reported as irregular
    if (wl.status == LimitStatus::unresolved || wr.status == LimitStatus::unresolved)
        return out;

    const double WL = wl.diverged() ? std::numeric_limits<double>::infinity() : wl.value;
    const double WR = wr.diverged() ? -std::numeric_limits<double>::infinity() : wr.value;

    if (WL <= sign_tol) { out.regular = true; return out; }   // W < 0 inside
    if (WR >= -sign_tol) { out.regular = true; return out; }  // W > 0 inside
    // W_L > 0 > W_R: bracket the sign change on the sampling grid
    out.regular = false;
    const std::vector<double> xs = linspace(grid);
    double a = xs.front(), b = xs.back();
    double Wa = W(a);
    if (Wa < 0.0) { out.zero_location = a; return out; } // zero left of the grid
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double Wb = W(xs[i]);
        if (Wb <= 0.0) { a = xs[i - 1]; b = xs[i]; break; }
        a = xs[i];
        Wa = Wb;
        if (i + 1 == xs.size()) { out.zero_location = b; return out; }
    }
    for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        if (W(m) > 0.0) a = m; else b = m;
    }
    out.zero_location = 0.5 * (a + b);
    return out;
}

} // namespace csusy::susy
