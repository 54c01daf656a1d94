#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lpenv/analysis.hpp"
#include "lpenv/verify.hpp"

using namespace lpenv;
using namespace lpenv::analysis;

namespace {
Exponent P(double p) { return Exponent::classify(p); }
}  // namespace

TEST_SUITE("sign functions") {
    TEST_CASE("exact zeros") {
        for (double p : {-2.0, -0.5, 0.5, 1.3, 3.0}) CHECK(v_fn(1.0, P(p)) == 0.0);
        for (double p : {0.5, 1.3, 3.0}) CHECK(g_fn(0.0, P(p)) == 0.0);
        CHECK(h_fn(1.0, P(1.5)) == doctest::Approx(std::pow(2.0, 1.5) - 2.0));
    }

    TEST_CASE("domain errors") {
        CHECK_THROWS_AS(v_fn(1.5, P(1.5)), std::invalid_argument);
        CHECK_THROWS_AS(h_fn(0.0, P(1.5)), std::invalid_argument);
        CHECK_THROWS_AS(h_tilde_d2(-0.1, P(-1.0)), std::invalid_argument);
        CHECK_THROWS_AS(sign_table(P(2.0), 100), std::invalid_argument);
        CHECK_THROWS_AS(torsion(1.0, P(1.5)), std::invalid_argument);
    }

    TEST_CASE("sign tables hold in both regimes") {
        for (double p : {-3.0, -1.0, -0.2, 0.2, 0.5, 0.9, 1.1, 1.5, 1.9, 2.1, 3.0, 6.0}) {
            for (const auto& row : sign_table(P(p), 500)) {
                INFO("p = " << p << " " << row.function);
                CHECK(row.violations == 0);
            }
        }
    }

    TEST_CASE("closed-form derivatives match finite differences") {
        for (double p : {-2.0, -0.5, 0.5, 1.5, 3.0}) {
            for (const auto& c : derivative_checks(P(p))) {
                INFO("p = " << p << " " << c.name << " t = " << c.t);
                CHECK(c.relative_error <= kDerivativeTolerance);
            }
        }
    }

    TEST_CASE("stencils are exact on cubics and quartics") {
        const std::function<double(double)> cubic = [](double x) { return x * x * x - 2 * x; };
        CHECK(central_d1(cubic, 0.5, 1e-2) == doctest::Approx(3 * 0.25 - 2).epsilon(1e-12));
        CHECK(central_d2(cubic, 0.5, 1e-2) == doctest::Approx(3.0).epsilon(1e-10));
        CHECK(central_d3(cubic, 0.5, 1e-2) == doctest::Approx(6.0).epsilon(1e-8));
    }
}

TEST_SUITE("torsion") {
    TEST_CASE("finite differences agree with analytic derivatives") {
        for (double p : {-1.0, 0.5, 1.5, 3.0}) {
            for (double s : {-0.9, -0.5, -0.1, 0.2, 0.6, 0.95}) {
                const double exact = torsion_exact(s, P(p));
                CHECK(torsion(s, P(p)) == doctest::Approx(exact).epsilon(1e-4).scale(1.0));
            }
        }
    }

    TEST_CASE("antisymmetric, so zero at s = 0") {
        for (double p : {-1.0, 0.5, 1.5, 3.0}) {
            CHECK(std::abs(torsion_exact(0.0, P(p))) < 1e-12);
            CHECK(torsion_exact(0.4, P(p)) == doctest::Approx(-torsion_exact(-0.4, P(p))).epsilon(1e-12));
        }
    }

    TEST_CASE("single sign change at the centre in the expected direction") {
        for (double p : {-1.0, 0.5, 1.5, 3.0}) {
            const auto report = torsion_sign_changes(P(p), 256);
            CHECK(report.count == 1);
            CHECK(std::abs(report.location) < 1e-3);
            CHECK(report.direction == expected_torsion_crossing(P(p)));
        }
        CHECK(expected_torsion_crossing(P(3.0)) == Crossing::MinusToPlus);
        CHECK(expected_torsion_crossing(P(1.5)) == Crossing::PlusToMinus);
        CHECK_THROWS_AS(torsion_sign_changes(P(1.0), 256), std::invalid_argument);
    }
}
