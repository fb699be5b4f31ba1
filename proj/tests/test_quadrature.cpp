#include <doctest.h>

#include <cmath>

#include "csusy/fd.hpp"
#include "csusy/limits.hpp"
#include "csusy/quadrature.hpp"
#include "csusy/rng.hpp"

using namespace csusy;

TEST_CASE("adaptive Simpson on smooth integrands") {
    CHECK(integrate([](double t) { return std::sin(t); }, 0.0, M_PI)
          == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double t) { return t * t; }, 0.0, 1.0)
          == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
    // orientation flip
    CHECK(integrate([](double t) { return std::exp(t); }, 1.0, 0.0)
          == doctest::Approx(1.0 - std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("adaptive Simpson reports budget exhaustion") {
    QuadControl qc;
    qc.abs_tol = 1e-14;
    qc.rel_tol = 1e-14;
    qc.max_depth = 4;
    CHECK_THROWS_AS(integrate([](double t) { return std::sin(1.0 / t); }, 1e-6, 1.0, qc),
                    QuadFailure);
}

TEST_CASE("cumulative antiderivative agrees with direct integration") {
    CumulativeAntiderivative F([](double t) { return std::cos(t); }, 0.5, 0.0, 3.0, 64);
    for (double t : {0.0, 0.5, 0.77, 1.9, 3.0}) {
        CHECK(F(t) == doctest::Approx(std::sin(t) - std::sin(0.5)).epsilon(1e-12));
    }
    CHECK(F(0.5) == 0.0);
    // queries outside the tabulated window fall back to direct quadrature
    CHECK(F(3.4) == doctest::Approx(std::sin(3.4) - std::sin(0.5)).epsilon(1e-11));
}

TEST_CASE("improper integrals Cauchy-stabilize or fail loudly") {
    CHECK(integrate_to_infinity([](double t) { return std::exp(-t * t); }, 0.0)
          == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-11));
    CHECK(integrate_from_minus_infinity([](double t) { return std::exp(-t * t); }, 0.0)
          == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-11));
    CHECK_THROWS_AS(integrate_to_infinity([](double t) { return 1.0 / (1.0 + t); }, 0.0),
                    LimitNotResolved);
}

TEST_CASE("finite-difference stencils") {
    auto f = [](double x) { return std::sin(2.0 * x); };
    CHECK(deriv1_5pt(f, 0.4, 1e-3)
          == doctest::Approx(2.0 * std::cos(0.8)).epsilon(1e-11));
    CHECK(deriv2_5pt(f, 0.4, 1e-3)
          == doctest::Approx(-4.0 * std::sin(0.8)).epsilon(1e-9));
}

TEST_CASE("endpoint limits") {
    auto sinc = [](double x) { return std::sin(x) / x; };
    const auto l1 = limit_at_finite(sinc, 0.0, +1);
    CHECK(l1.converged());
    CHECK(l1.value == doctest::Approx(1.0).epsilon(1e-9));

    const auto l2 = limit_at_infinity([](double x) { return std::tanh(x); }, +1);
    CHECK(l2.converged());
    CHECK(l2.value == doctest::Approx(1.0).epsilon(1e-9));

    const auto l3 = limit_at_infinity([](double x) { return std::exp(x); }, +1);
    CHECK(l3.diverged());

    const auto l4 = limit_toward([](double x) { return std::erfc(x); },
                                 -std::numeric_limits<double>::infinity(), +1);
    CHECK(l4.converged());
    CHECK(l4.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("seeded generator is reproducible and uniform-ranged") {
    Lcg64 a(42), b(42);
    for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());
    Lcg64 c(42);
    for (int i = 0; i < 1000; ++i) {
        const double v = c.uniform(-2.0, 3.0);
        CHECK(v >= -2.0);
        CHECK(v < 3.0);
    }
}
