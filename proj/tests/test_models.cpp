#include <doctest.h>

#include <cmath>

#include "csusy/models.hpp"
#include "csusy/susy.hpp"
#include "csusy/wronskid.hpp"
#include "test_support.hpp"

using namespace csusy;
using test_support::j2_residual;

TEST_CASE("box pair: values, chain residual, Wronskian offset") {
    const auto pot = models::box_potential();
    const double lam = 4.0 * M_PI * M_PI, K = 0.555;
    const auto pair = models::box_pair(K);
    CHECK(pair.v(0.0, lam) == doctest::Approx(-K / std::sqrt(lam)).epsilon(1e-14));

    double worst = 0.0;
    for (int i = 1; i < 40; ++i) {
        const double x = i / 40.0;
        worst = std::max(worst, j2_residual([&](double t) { return pair.v(t, lam); },
                                            [&](double t) { return pair.v_x(t, lam); },
                                            pair.family, pot, x, lam, 2.5e-4));
    }
    CHECK(worst < 1e-10);

    // W_{u,v}(x) = K + W_{u,u_lambda}(x); at x=1 and lambda = m^2 pi^2: K - 1/2
    for (double x : {0.0, 0.33, 1.0}) {
        const double w = pair.v_x(x, lam) * pair.family.u(x, lam)
                         - pair.v(x, lam) * pair.family.u_x(x, lam);
        CHECK(std::abs(w - (K + jordan::w_u_ulambda(pair.family, x, lam))) < 1e-12);
    }
    const double w1 = pair.family.u(1.0, lam) * pair.v_x(1.0, lam)
                      - pair.v(1.0, lam) * pair.family.u_x(1.0, lam);
    CHECK(w1 == doctest::Approx(K - 0.5).epsilon(1e-12));
}

TEST_CASE("box closed-form partner potential") {
    CHECK(std::abs(models::box_partner_closed(2, 0.555, 0.0)) < 1e-12);
    CHECK(std::abs(models::box_partner_closed(1, -0.3, 0.0)) < 1e-12);

    const auto pot = models::box_potential();
    auto tr = susy::make_transform_df(pot, 4.0 * M_PI * M_PI, models::box_u(), 0.555,
                                      models::box_u2());
    CHECK(models::box_partner_closed(2, 0.555, 0.25)
          == doctest::Approx(susy::partner_potential(tr, 0.25)).epsilon(1e-12));

    // large K flattens the deformation pointwise
    for (double x : {0.1, 0.5, 0.9})
        CHECK(std::abs(models::box_partner_closed(2, 1e6, x)) < 1e-3);

    CHECK_THROWS_AS(models::box_partner_closed(2, 0.25, 0.5), DivisionByZero);
}

TEST_CASE("oscillator solution: small-x order and chain residual") {
    const auto u = models::rosc_u(1);
    // u ~ x^{l+1} near the origin
    CHECK(u.u(1e-4, 8.0) == doctest::Approx(1e-8).epsilon(0.01));

    const auto pot = models::rosc_potential(1);
    const auto pair = models::rosc_pair(1, 0.0);
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const double x = 0.2 + 2.8 * i / 40.0;
        worst = std::max(worst, j2_residual([&](double t) { return pair.v(t, 8.0); },
                                            [&](double t) { return pair.v_x(t, 8.0); },
                                            u, pot, x, 8.0, 1e-3));
    }
    CHECK(worst < 1e-7);

    // W_{u,u_lambda} -> 0 at the origin
    CHECK(std::abs(jordan::w_u_ulambda(u, 1e-5, 8.0)) < 1e-12);
    CHECK(std::abs(models::rosc_w_closed(1, 1e-5, 8.0)) < 1e-12);
}

TEST_CASE("oscillator auxiliary function: h = u_x - ((l+1)/x - x) u") {
    const auto u = models::rosc_u(1);
    for (double x : {0.4, 1.1, 2.3}) {
        const double g = (1.0 + 1.0) / x - x;
        CHECK(models::rosc_h(1, x, 8.0)
              == doctest::Approx(u.u_x(x, 8.0) - g * u.u(x, 8.0)).epsilon(1e-12));
    }
    // W identity through h: u h_lambda - u_lambda h equals the family Wronskian
    for (double x : {0.6, 1.7}) {
        CHECK(models::rosc_w_closed(1, x, 8.0)
              == doctest::Approx(jordan::w_u_ulambda(u, x, 8.0)).epsilon(1e-12));
    }
}

TEST_CASE("oscillator closed-form integral of u1^2") {
    const auto u = models::rosc_u(1);
    CHECK(std::abs(models::rosc_integral_u1sq(1, 8.0, 1e-3)) < 1e-10);
    for (double lam : {6.3, 8.0}) {
        for (double x : {0.8, 1.5}) {
            const double cf = models::rosc_integral_u1sq(1, lam, x);
            const double q = integrate([&](double t) {
                const double ut = u.u(t, lam);
                return ut * ut;
            }, 0.0, x);
            CHECK(std::abs(cf - q) < 1e-7 * (1.0 + std::abs(cf)));
            CHECK(std::abs(cf - wronskid::integrate_u2(u, 1e-9, x, lam))
                  < 1e-9 * (1.0 + std::abs(cf)));
        }
    }
}

TEST_CASE("oscillator closed-form antiderivative of u2^2") {
    const auto u2 = models::rosc_u2(1);
    for (double lam : {6.3, 8.0}) {
        // the series value is exactly the Wronskian W_{u2,(u2)_lambda}
        for (double x : {1.0, 2.0, 3.0}) {
            CHECK(models::rosc_integral_u2sq(1, lam, x)
                  == doctest::Approx(jordan::w_u_ulambda(u2, x, lam)).epsilon(1e-11));
        }
        // difference of values integrates u2^2 (quadrature oracle)
        const double d = models::rosc_integral_u2sq(1, lam, 2.0)
                         - models::rosc_integral_u2sq(1, lam, 3.0);
        const double q = integrate([&](double t) {
            const double ut = u2.u(t, lam);
            return ut * ut;
        }, 2.0, 3.0);
        CHECK(std::abs(d - q) < 1e-6 * (1.0 + std::abs(d)));
    }
}

TEST_CASE("oscillator eigenstates: energies, decay, derivative poles") {
    CHECK(models::rosc_eigenvalue(1, 0) == 5.0);
    CHECK(models::rosc_eigenvalue(1, 1) == 9.0);
    for (int n = 0; n <= 2; ++n) {
        const auto psi = models::rosc_eigenfunction(1, n);
        CHECK(std::abs(psi.u(8.0, 0.0)) < 1e-8);
        CHECK_THROWS_AS(psi.u_lambda(1.0, 0.0), PoleError);
    }
    // 1F1(0;b;x^2) = 1: the n = 0 state is x^{l+1} e^{-x^2/2}
    const auto psi0 = models::rosc_eigenfunction(1, 0);
    CHECK(psi0.u(1.3, 0.0)
          == doctest::Approx(1.3 * 1.3 * std::exp(-0.5 * 1.69)).epsilon(1e-14));
}

TEST_CASE("energy-dependent oscillator: states and closed-form Wronskian") {
    const auto e0 = models::edho_state(0);
    CHECK(models::edho_lambda(0) == 1.0);
    CHECK(e0.u(1.1, 1.0) == doctest::Approx(std::exp(-0.5 * 1.21)).epsilon(1e-14));

    // family Wronskian against the erfc-stable closed form
    double worst = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const double x = -3.0 + 6.0 * i / 60.0;
        worst = std::max(worst,
                         std::abs(jordan::w_u_ulambda(e0, x, 1.0) - models::edho_w0_closed(x)));
    }
    CHECK(worst < 1e-7);

    // boundary decay at |x| = 6 sits at e^{-18} = 1.52e-8 for the ground state
    for (int n = 0; n <= 2; ++n) {
        const auto st = models::edho_state(n);
        CHECK(std::abs(st.u(6.0, 0.0)) < 2e-8);
        CHECK(std::abs(st.u(-6.0, 0.0)) < 2e-8);
        CHECK(test_support::j1_residual(st, models::edho_potential(), 0.7,
                                        models::edho_lambda(n)) < 1e-9);
    }
}

TEST_CASE("energy-dependent oscillator: u_lambda solves the driven equation") {
    const auto e0 = models::edho_state(0);
    const auto pot = models::edho_potential();
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double x = -2.0 + 4.0 * i / 20.0;
        auto v = [&](double t) { return e0.u_lambda(t, 1.0); };
        const double vxx = deriv2_5pt(v, x, 1e-2);
        const double res = vxx + (1.0 - pot.v(x, 1.0)) * v(x)
                           - (pot.vl(x, 1.0) - 1.0) * e0.u(x, 1.0);
        worst = std::max(worst, std::abs(res));
    }
    CHECK(worst < 1e-5);
}

TEST_CASE("closed-form families: accessors agree with finite differences") {
    struct Probe {
        jordan::SolutionFamily fam;
        double lam;
        std::vector<double> xs;
    };
    const std::vector<Probe> probes = {
        {models::box_u(), 4.0 * M_PI * M_PI, {0.2, 0.5, 0.85}},
        {models::box_u2(), 7.3, {0.2, 0.5, 0.85}},
        {models::rosc_u(1), 8.0, {0.4, 1.1, 2.6}},
        {models::rosc_u2(1), 8.0, {0.4, 1.1, 2.6}},
        {models::edho_state(1), models::edho_lambda(1), {-1.3, 0.4, 1.8}},
    };
    for (const auto& p : probes) {
        for (double x : p.xs) {
            const double fdx =
                deriv1_5pt([&](double t) { return p.fam.u(t, p.lam); }, x, 1e-4);
            CHECK(std::abs(p.fam.u_x(x, p.lam) - fdx)
                  <= 1e-6 * (1.0 + std::abs(fdx)));
            const double fdlx =
                deriv1_5pt([&](double t) { return p.fam.u_lambda(t, p.lam); }, x, 1e-4);
            CHECK(std::abs(p.fam.u_lambda_x(x, p.lam) - fdlx)
                  <= 1e-5 * (1.0 + std::abs(fdlx)));
        }
    }
}

TEST_CASE("energy-dependent norm: sign-changing weight, positive result") {
    const auto e0 = models::edho_state(0);
    const auto pot = models::edho_potential();
    // the weight 1 - V_lambda = 1 - x^2 changes sign inside the domain
    CHECK((1.0 - pot.vl(0.5, 1.0)) > 0.0);
    CHECK((1.0 - pot.vl(2.0, 1.0)) < 0.0);
    const auto n = wronskid::norm_energy(e0, pot, 1.0);
    const double target = std::sqrt(M_PI) / 2.0;
    CHECK(std::abs(n.value - target) < 1e-7);
    CHECK(std::abs(n.left_limit - target) < 1e-7);
    CHECK(std::abs(n.right_limit) < 1e-7);
    const auto q = wronskid::norm_energy_quadrature(e0, pot, 1.0);
    CHECK(std::abs(q.value - n.value) < 1e-7);
}
