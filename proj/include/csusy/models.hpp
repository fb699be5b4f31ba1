#pragma once

#include <cmath>

#include "csusy/errors.hpp"
#include "csusy/jordan.hpp"
#include "csusy/specfun.hpp"

namespace csusy::models {

using jordan::EnergyPotential;
using jordan::JordanPair;
using jordan::Provenance;
using jordan::SolutionFamily;

// ---------------------------------------------------------------------------
// Particle in a box: V = 0 on (0,1), eigenvalues n^2 pi^2, n >= 1.
// ---------------------------------------------------------------------------

inline EnergyPotential box_potential() {
    EnergyPotential p;
    p.v = [](double, double) { return 0.0; };
    p.x_left = 0.0;
    p.x_right = 1.0;
    return p;
}

inline double box_eigenvalue(int n) { return n * M_PI * n * M_PI; }

/// u(x, lambda) = A sin(sqrt(lambda) x) with all derivatives in closed form.
inline SolutionFamily box_u(double amplitude = 1.0) {
    SolutionFamily f;
    f.provenance = Provenance::closed_form;
    f.u = [amplitude](double x, double lam) {
        return amplitude * std::sin(std::sqrt(lam) * x);
    };
    f.u_x = [amplitude](double x, double lam) {
        const double k = std::sqrt(lam);
        return amplitude * k * std::cos(k * x);
    };
    f.u_lambda = [amplitude](double x, double lam) {
        const double k = std::sqrt(lam);
        return amplitude * x * std::cos(k * x) / (2.0 * k);
    };
    f.u_lambda_x = [amplitude](double x, double lam) {
        const double k = std::sqrt(lam);
        return amplitude * (std::cos(k * x) - k * x * std::sin(k * x)) / (2.0 * k);
    };
    return f;
}

/// Unit-Wronskian partner u2 = -cos(sqrt(lambda) x)/sqrt(lambda).
inline SolutionFamily box_u2() {
    SolutionFamily f;
    f.provenance = Provenance::closed_form;
    f.u = [](double x, double lam) {
        const double k = std::sqrt(lam);
        return -std::cos(k * x) / k;
    };
    f.u_x = [](double x, double lam) { return std::sin(std::sqrt(lam) * x); };
    f.u_lambda = [](double x, double lam) {
        const double k = std::sqrt(lam);
        return (k * x * std::sin(k * x) + std::cos(k * x)) / (2.0 * k * k * k);
    };
    f.u_lambda_x = [](double x, double lam) {
        const double k = std::sqrt(lam);
        return x * std::cos(k * x) / (2.0 * k);
    };
    return f;
}

/// Chain pair v = u_lambda + K u2 = x cos(kx)/(2k) - (K/k) cos(kx).
inline JordanPair box_pair(double K) { return jordan::make_pair_df(box_u(), K, box_u2()); }

/// Partner potential of the box in closed form at lambda = m^2 pi^2:
///   16 pi^2 m^2 [1 + m pi (2K - x) sin(2 m pi x) - cos(2 m pi x)]
///   / [2 m pi (2K - x) + sin(2 pi m x)]^2.
inline double box_partner_closed(int m, double K, double x) {
    const double mp = m * M_PI;
    const double den = 2.0 * mp * (2.0 * K - x) + std::sin(2.0 * mp * x);
    if (std::abs(den) < 1e-12 * (1.0 + std::abs(K)))
        throw DivisionByZero("box_partner_closed: Wronskian node (irregular K)");
    const double num =
        16.0 * mp * mp * (1.0 + mp * (2.0 * K - x) * std::sin(2.0 * mp * x)
                          - std::cos(2.0 * mp * x));
    return num / (den * den);
}

/// Normalized eigenfunction sqrt(2) sin(n pi x), exposed as a family so the
/// state transform can evaluate it at its own energy argument.
inline SolutionFamily box_eigenfunction() { return box_u(std::sqrt(2.0)); }

// ---------------------------------------------------------------------------
// Radial oscillator: V = x^2 + l(l+1)/x^2 on (0, inf).
// ---------------------------------------------------------------------------

namespace rosc_detail {

struct Params {
    double a, b, c, d;
};

inline Params params(int ell, double lambda) {
    return {(2.0 * ell + 3.0 - lambda) / 4.0, ell + 1.5,
            (-2.0 * ell + 1.0 - lambda) / 4.0, 0.5 - ell};
}

} // namespace rosc_detail

inline EnergyPotential rosc_potential(int ell) {
    EnergyPotential p;
    p.v = [ell](double x, double) { return x * x + ell * (ell + 1.0) / (x * x); };
    p.x_left = 0.0;
    p.x_right = std::numeric_limits<double>::infinity();
    return p;
}

/// Bound-state energies 4n + 2l + 3. Indexing conventions differ between
/// sources (some start at n = 1); this API takes n >= 0, where n = 0 has
/// 1F1(0; b; x^2) = 1 and is a valid bound state.
inline double rosc_eigenvalue(int ell, int n) { return 4.0 * n + 2.0 * ell + 3.0; }

/// Auxiliary function h with u_x = ((l+1)/x - x) u + h; since
/// h = u_x + g(x) u with lambda-free g, W_{u,u_lambda} = u h_lambda - u_lambda h.
inline double rosc_h(int ell, double x, double lambda,
                     const specfun::SeriesControl& ctl = {}) {
    const auto p = rosc_detail::params(ell, lambda);
    const double z = x * x;
    return (2.0 * ell + 3.0 - lambda) / (2.0 * ell + 3.0) * std::pow(x, ell + 2)
           * std::exp(-0.5 * z) * specfun::hyp1f1(p.a + 1.0, p.b + 1.0, z, ctl);
}

inline double rosc_h_lambda(int ell, double x, double lambda,
                            const specfun::SeriesControl& ctl = {}) {
    const auto p = rosc_detail::params(ell, lambda);
    const double z = x * x;
    return -0.5 * std::pow(x, ell + 2) * std::exp(-0.5 * z)
           * (specfun::hyp1f1(p.a + 1.0, p.b + 1.0, z, ctl) / p.b
              + p.a / p.b * specfun::hyp1f1_da(p.a + 1.0, p.b + 1.0, z, ctl));
}

/// u(x, lambda) = x^{l+1} e^{-x^2/2} 1F1(a; l+3/2; x^2),
/// a = (2l+3-lambda)/4; u_lambda via the 1F1 parameter derivative.
inline SolutionFamily rosc_u(int ell, specfun::SeriesControl ctl = {}) {
    SolutionFamily f;
    f.provenance = Provenance::closed_form;
    f.u = [ell, ctl](double x, double lam) {
        const auto p = rosc_detail::params(ell, lam);
        const double z = x * x;
        return std::pow(x, ell + 1) * std::exp(-0.5 * z) * specfun::hyp1f1(p.a, p.b, z, ctl);
    };
    f.u_x = [ell, ctl, f](double x, double lam) {
        return ((ell + 1.0) / x - x) * f.u(x, lam) + rosc_h(ell, x, lam, ctl);
    };
    f.u_lambda = [ell, ctl](double x, double lam) {
        const auto p = rosc_detail::params(ell, lam);
        const double z = x * x;
        return -0.25 * std::pow(x, ell + 1) * std::exp(-0.5 * z)
               * specfun::hyp1f1_da(p.a, p.b, z, ctl);
    };
    f.u_lambda_x = [ell, ctl, f](double x, double lam) {
        return ((ell + 1.0) / x - x) * f.u_lambda(x, lam) + rosc_h_lambda(ell, x, lam, ctl);
    };
    return f;
}

/// Second solution u2 = -x^{-l} e^{-x^2/2} 1F1(c; 1/2-l; x^2)/(2l+1),
/// singular at the origin, with W_{u, u2} = 1.
inline SolutionFamily rosc_u2(int ell, specfun::SeriesControl ctl = {}) {
    const double pref = -1.0 / (2.0 * ell + 1.0);
    SolutionFamily f;
    f.provenance = Provenance::closed_form;
    f.u = [ell, ctl, pref](double x, double lam) {
        const auto p = rosc_detail::params(ell, lam);
        const double z = x * x;
        return pref * std::pow(x, -ell) * std::exp(-0.5 * z)
               * specfun::hyp1f1(p.c, p.d, z, ctl);
    };
    f.u_x = [ell, ctl, pref, f](double x, double lam) {
        const auto p = rosc_detail::params(ell, lam);
        const double z = x * x;
        const double h2 = pref * 2.0 * p.c / p.d * std::pow(x, 1 - ell) * std::exp(-0.5 * z)
                          * specfun::hyp1f1(p.c + 1.0, p.d + 1.0, z, ctl);
        return (-ell / x - x) * f.u(x, lam) + h2;
    };
    f.u_lambda = [ell, ctl](double x, double lam) {
        const auto p = rosc_detail::params(ell, lam);
        const double z = x * x;
        return std::pow(x, -ell) * std::exp(-0.5 * z)
               * specfun::hyp1f1_da(p.c, p.d, z, ctl) / (4.0 * (2.0 * ell + 1.0));
    };
    f.u_lambda_x = [ell, ctl, f](double x, double lam) {
        const auto p = rosc_detail::params(ell, lam);
        const double z = x * x;
        const double h2l = std::pow(x, 1 - ell) * std::exp(-0.5 * z)
                           * (specfun::hyp1f1(p.c + 1.0, p.d + 1.0, z, ctl) / p.d
                              + p.c / p.d * specfun::hyp1f1_da(p.c + 1.0, p.d + 1.0, z, ctl))
                           / (2.0 * (2.0 * ell + 1.0));
        return (-ell / x - x) * f.u_lambda(x, lam) + h2l;
    };
    return f;
}

inline JordanPair rosc_pair(int ell, double K) {
    return jordan::make_pair_df(rosc_u(ell), K, rosc_u2(ell));
}

/// W_{u,u_lambda}(x) = u h_lambda - u_lambda h in closed form.
inline double rosc_w_closed(int ell, double x, double lambda,
                            const specfun::SeriesControl& ctl = {}) {
    const SolutionFamily f = rosc_u(ell, ctl);
    return f.u(x, lambda) * rosc_h_lambda(ell, x, lambda, ctl)
         - f.u_lambda(x, lambda) * rosc_h(ell, x, lambda, ctl);
}

/// Partner potential of the radial oscillator built from u, h, h_lambda:
///   V + [4 u u_x (K + u h_l - u_l h) + 2 u^4] / (K + u h_l - u_l h)^2.
inline double rosc_partner_closed(int ell, double lambda, double K, double x,
                                  const specfun::SeriesControl& ctl = {}) {
    const SolutionFamily f = rosc_u(ell, ctl);
    const double W = K + rosc_w_closed(ell, x, lambda, ctl);
    if (std::abs(W) < 1e-12 * (1.0 + std::abs(K)))
        throw WronskianZero("rosc_partner_closed: Wronskian node");
    const double u = f.u(x, lambda);
    const double ux = f.u_x(x, lambda);
    const double V = x * x + ell * (ell + 1.0) / (x * x);
    return V + (4.0 * u * ux * W + 2.0 * u * u * u * u) / (W * W);
}

/// Closed-form series for Int_0^x u1^2 dt (equal to -W_{u1,(u1)_lambda}(x)
/// since the Wronskian vanishes at the origin).
inline double rosc_integral_u1sq(int ell, double lambda, double x,
                                 const specfun::SeriesControl& ctl = {}) {
    const auto p = rosc_detail::params(ell, lambda);
    const double z = x * x;
    const double Fa = specfun::hyp1f1(p.a, p.b, z, ctl);
    const double Fa1 = specfun::hyp1f1(p.a + 1.0, p.b + 1.0, z, ctl);
    const double Sa = specfun::hyp1f1_da(p.a, p.b, z, ctl);
    const double Sa1 = specfun::hyp1f1_da(p.a + 1.0, p.b + 1.0, z, ctl);
    return p.a / (2.0 * p.b) * std::pow(x, 2 * ell + 3) * std::exp(-z)
           * (Fa * Sa1 + Fa1 * (Fa / p.a - Sa));
}

/// Closed-form series antiderivative for u2^2: equals W_{u2,(u2)_lambda}(x),
/// so Int_{x1}^{x2} u2^2 dt = value(x1) - value(x2). It equals the improper
/// integral Int_x^inf u2^2 only when u2 decays at infinity (terminating 1F1).
inline double rosc_integral_u2sq(int ell, double lambda, double x,
                                 const specfun::SeriesControl& ctl = {}) {
    const auto p = rosc_detail::params(ell, lambda);
    const double z = x * x;
    const double Fc = specfun::hyp1f1(p.c, p.d, z, ctl);
    const double Fc1 = specfun::hyp1f1(p.c + 1.0, p.d + 1.0, z, ctl);
    const double Sc = specfun::hyp1f1_da(p.c, p.d, z, ctl);
    const double Sc1 = specfun::hyp1f1_da(p.c + 1.0, p.d + 1.0, z, ctl);
    const double l1 = 2.0 * ell + 1.0;
    return -p.c / (2.0 * p.d * l1 * l1) * std::pow(x, 1 - 2 * ell) * std::exp(-z)
           * (Fc * Sc1 + Fc1 * (Fc / p.c - Sc));
}

/// Bound state x^{l+1} e^{-x^2/2} 1F1(-n; l+3/2; x^2) at energy 4n+2l+3.
/// The energy derivative of an eigenstate hits the 1F1 parameter-derivative
/// pole (first parameter a non-positive integer), so those accessors raise.
inline SolutionFamily rosc_eigenfunction(int ell, int n, specfun::SeriesControl ctl = {}) {
    SolutionFamily f;
    f.provenance = Provenance::closed_form;
    f.u = [ell, n, ctl](double x, double) {
        const double z = x * x;
        return std::pow(x, ell + 1) * std::exp(-0.5 * z)
               * specfun::hyp1f1(-n, ell + 1.5, z, ctl);
    };
    f.u_x = [ell, n, ctl, f](double x, double lam) {
        const double z = x * x;
        const double b = ell + 1.5;
        const double h = 2.0 * (-n) / b * std::pow(x, ell + 2) * std::exp(-0.5 * z)
                         * specfun::hyp1f1(-n + 1.0, b + 1.0, z, ctl);
        return ((ell + 1.0) / x - x) * f.u(x, lam) + h;
    };
    f.u_lambda = [](double, double) -> double {
        throw PoleError("rosc eigenstate: u_lambda hits the series parameter pole");
    };
    f.u_lambda_x = [](double, double) -> double {
        throw PoleError("rosc eigenstate: u_lambda_x hits the series parameter pole");
    };
    return f;
}

// ---------------------------------------------------------------------------
// Energy-dependent harmonic oscillator: V(x, lambda) = lambda x^2 on R,
// spectrum lambda_n = (2n+1)^2.
// ---------------------------------------------------------------------------

inline EnergyPotential edho_potential() {
    EnergyPotential p;
    p.v = [](double x, double lam) { return lam * x * x; };
    p.v_lambda = [](double x, double) { return x * x; };
    return p;
}

inline double edho_lambda(int n) { return (2.0 * n + 1.0) * (2.0 * n + 1.0); }

/// Energy derivative of the n-th state by the chain rule through the index:
///   u_lambda = (du_n/dn) / (d lambda_n/dn),  d lambda_n/dn = 8n + 4,
/// the Hermite-order derivative taken by central difference.
inline double edho_u_lambda(int n, double x, double fd_step = 1e-5,
                            const specfun::SeriesControl& ctl = {}) {
    const double q = std::sqrt(2.0 * n + 1.0);
    const double s = q * x;
    double bracket = -x * x * specfun::hermite(n, s, ctl) + specfun::dhermite_dnu(n, s, fd_step, ctl);
    if (n > 0)
        bracket += 2.0 * n * x / q * specfun::hermite(n - 1, s, ctl);
    return std::exp(-0.5 * q * q * x * x) * bracket / (8.0 * n + 4.0);
}

/// Bound state u_n = e^{-(2n+1)x^2/2} H_n(sqrt(2n+1) x), pinned at
/// lambda_n = (2n+1)^2; the family's lambda argument is ignored (states at
/// other energies are not constructed for this model).
inline SolutionFamily edho_state(int n, double fd_step = 1e-5,
                                 specfun::SeriesControl ctl = {}) {
    const double q = std::sqrt(2.0 * n + 1.0);
    SolutionFamily f;
    f.provenance = Provenance::closed_form;
    f.fd_step_lambda = fd_step;
    f.u = [n, q, ctl](double x, double) {
        return std::exp(-0.5 * q * q * x * x) * specfun::hermite(n, q * x, ctl);
    };
    f.u_x = [n, q, ctl](double x, double) {
        const double s = q * x;
        double d = -q * q * x * specfun::hermite(n, s, ctl);
        if (n > 0) d += q * 2.0 * n * specfun::hermite(n - 1, s, ctl);
        return std::exp(-0.5 * q * q * x * x) * d;
    };
    f.u_lambda = [n, fd_step, ctl](double x, double) {
        return edho_u_lambda(n, x, fd_step, ctl);
    };
    f.u_lambda_x = [n, q, fd_step, ctl](double x, double) {
        const double s = q * x;
        const double hn = specfun::hermite(n, s, ctl);
        double bracket = -x * x * hn + specfun::dhermite_dnu(n, s, fd_step, ctl);
        // d/ds of dH/dnu at nu = n: 2 H_{n-1} + 2n dH/dnu at n-1
        double dprime = 2.0 * specfun::hermite(n - 1.0, s, ctl);
        if (n > 0) dprime += 2.0 * n * specfun::dhermite_dnu(n - 1, s, fd_step, ctl);
        double dbracket = -2.0 * x * hn + q * dprime;
        if (n > 0) {
            const double hn1 = specfun::hermite(n - 1, s, ctl);
            bracket += 2.0 * n * x / q * hn1;
            dbracket += -x * x * 2.0 * n * q * hn1 + 2.0 * n / q * hn1
                        + 2.0 * n * x * 2.0 * (n - 1.0) * specfun::hermite(n - 2.0, s, ctl);
        }
        return std::exp(-0.5 * q * q * x * x) * (-q * q * x * bracket + dbracket)
               / (8.0 * n + 4.0);
    };
    return f;
}

/// Ground-state Wronskian W_{u0,(u0)_lambda} in closed form, written with
/// erfc so it stays finite for all x:
///   -(1/2) e^{-x^2} [x - H_{-1}(x)] = -(x/2) e^{-x^2} + (sqrt(pi)/4) erfc(x).
inline double edho_w0_closed(double x) {
    return -0.5 * x * std::exp(-x * x) + 0.25 * std::sqrt(M_PI) * std::erfc(x);
}

} // namespace csusy::models
