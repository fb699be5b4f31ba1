#pragma once

#include <cmath>
#include <limits>

#include "csusy/errors.hpp"
#include "csusy/jordan.hpp"
#include "csusy/limits.hpp"
#include "csusy/quadrature.hpp"

namespace csusy::wronskid {

using jordan::EnergyPotential;
using jordan::SolutionFamily;

enum class NormMethod { wronskian_limits, quadrature };

/// Result of a (possibly signed) normalization integral. Not a norm in the
/// strict sense: with the (1 - V_lambda) weight it can come out negative,
/// and it is returned as computed.
struct NormResult {
    double value = 0.0;
    NormMethod method = NormMethod::wronskian_limits;
    double left_limit = std::numeric_limits<double>::quiet_NaN();
    double right_limit = std::numeric_limits<double>::quiet_NaN();
};

/// Int_{x0}^{x} u^2 dt = W_{u,u_lambda}(x0) - W_{u,u_lambda}(x)
/// (energy-independent potential).
inline double integrate_u2(const SolutionFamily& fam, double x0, double x, double lambda) {
    return jordan::w_u_ulambda(fam, x0, lambda) - jordan::w_u_ulambda(fam, x, lambda);
}

/// Int_{x0}^{x} (1 - V_lambda) u^2 dt, same Wronskian difference. Reduces
/// bit-for-bit to integrate_u2 when the potential is energy-independent:
/// the identity holds with the weight folded into the family's equation.
inline double integrate_u2_energy(const SolutionFamily& fam, const EnergyPotential& pot,
                                  double x0, double x, double lambda) {
    (void)pot; // weight enters through the chain equation the family solves
    return integrate_u2(fam, x0, x, lambda);
}

/// Normalization by Wronskian endpoint limits:
///   N(u) = lim_{x -> x_left} W_{u,u_lambda} - lim_{x -> x_right} W_{u,u_lambda}.
inline NormResult norm_energy(const SolutionFamily& fam, const EnergyPotential& pot,
                              double lambda, LimitControl lc = {}) {
    auto wfun = [&fam, lambda](double x) { return jordan::w_u_ulambda(fam, x, lambda); };
    const EndpointLimit left = limit_toward(wfun, pot.x_left, +1, lc);
    const EndpointLimit right = limit_toward(wfun, pot.x_right, -1, lc);
    if (!left.converged() || !right.converged())
        throw LimitNotResolved("norm_energy: Wronskian endpoint limit did not resolve");
    NormResult r;
    r.method = NormMethod::wronskian_limits;
    r.left_limit = left.value;
    r.right_limit = right.value;
    r.value = left.value - right.value;
    return r;
}

/// Same normalization by direct quadrature of (1 - V_lambda) u^2 over the
/// potential's domain (truncated Cauchy-stably at infinite endpoints).
inline NormResult norm_energy_quadrature(const SolutionFamily& fam, const EnergyPotential& pot,
                                         double lambda, QuadControl qc = {}) {
    auto w = [&fam, &pot, lambda](double t) {
        const double u = fam.u(t, lambda);
        return (1.0 - pot.vl(t, lambda)) * u * u;
    };
    NormResult r;
    r.method = NormMethod::quadrature;
    const bool li = std::isinf(pot.x_left), ri = std::isinf(pot.x_right);
    if (li && ri) {
        r.value = integrate_from_minus_infinity(w, 0.0, qc) + integrate_to_infinity(w, 0.0, qc);
    } else if (ri) {
        r.value = integrate_to_infinity(w, pot.x_left, qc);
    } else if (li) {
        r.value = integrate_from_minus_infinity(w, pot.x_right, qc);
    } else {
        r.value = integrate(w, pot.x_left, pot.x_right, qc);
    }
    return r;
}

/// Complex solutions enter as separate real and imaginary families; the
/// normalization splits into the two real integrals and never requires
/// complex arithmetic here.
inline NormResult norm_energy_complex(const SolutionFamily& re, const SolutionFamily& im,
                                      const EnergyPotential& pot, double lambda,
                                      LimitControl lc = {}) {
    const NormResult a = norm_energy(re, pot, lambda, lc);
    const NormResult b = norm_energy(im, pot, lambda, lc);
    NormResult r;
    r.method = NormMethod::wronskian_limits;
    r.value = a.value + b.value;
    r.left_limit = a.left_limit + b.left_limit;
    r.right_limit = a.right_limit + b.right_limit;
    return r;
}

/// Double integral Int_{x0}^{x} [Int_{x0}^{t} u1^2 ds] u1(t)^{-2} dt via the
/// connection identity:  = -[u1_lambda(x) - d1 u1(x) - d2 u2(x)] / u1(x).
inline double double_integral(const SolutionFamily& u1, const SolutionFamily& u2, double x0,
                              double x, double lambda, const jordan::ConnectionCoeffs& coeffs) {
    const double u1x = u1.u(x, lambda);
    const double numerator =
        u1.u_lambda(x, lambda) - coeffs.d1 * u1x - coeffs.d2 * u2.u(x, lambda);
    if (std::abs(u1x) < 1e-13 * (1.0 + std::abs(numerator)))
        throw DivisionByZero("double_integral: u1 vanishes at the evaluation point");
    (void)x0; // base point is carried by coeffs
    return -numerator / u1x;
}

/// Int u1 u2 by bilinear expansion of the square identity with s = u1 + u2:
///   Int u1 u2 = (Int s^2 - Int u1^2 - Int u2^2) / 2.
inline double cross_integral(const SolutionFamily& u1, const SolutionFamily& u2, double x0,
                             double x, double lambda) {
    const SolutionFamily s = jordan::combine(u1, u2);
    return 0.5 * (integrate_u2(s, x0, x, lambda) - integrate_u2(u1, x0, x, lambda)
                  - integrate_u2(u2, x0, x, lambda));
}

} // namespace csusy::wronskid
