#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lpenv/oracle.hpp"
#include "lpenv/sampling.hpp"
#include "lpenv/verify.hpp"

using namespace lpenv;

TEST_SUITE("boundary curve") {
    TEST_CASE("nodes and data") {
        const auto p = Exponent::classify(1.5);
        const auto curve = BoundaryCurve::build(p, 64);
        CHECK(curve.nodes().size() == 64 + 16);
        CHECK(curve.nodes().front().s == 1.0);
        CHECK(curve.nodes()[63].s == -1.0);
        for (int k = 0; k < 64; ++k) {
            const auto& a = curve.nodes()[k];
            const auto& b = curve.nodes()[63 - k];
            CHECK(a.s == -b.s);
            CHECK(a.z == b.z);
        }
        CHECK(curve.diameter_value() == 2.0);
        CHECK(BoundaryCurve::build(Exponent::classify(-1.0), 16).diameter_value() == 0.0);
        CHECK(curve.arc_value(0.0) == doctest::Approx(std::pow(2.0, 1.5)));
        CHECK_THROWS_AS(BoundaryCurve::build(p, 8), std::invalid_argument);
    }
}

TEST_SUITE("oracle") {
    TEST_CASE("exact where the boundary data are affine") {
        const auto two = BoundaryCurve::build(Exponent::classify(2.0), 64);
        const auto one = BoundaryCurve::build(Exponent::classify(1.0), 64);
        for (const auto& q : interior_grid(10)) {
            for (auto kind : {EnvelopeKind::Concave, EnvelopeKind::Convex}) {
                CHECK(oracle_envelope(two, q.s, q.z, kind) == doctest::Approx(2.0 + 2.0 * q.z).epsilon(1e-12));
                CHECK(oracle_envelope(one, q.s, q.z, kind) == doctest::Approx(2.0).epsilon(1e-12));
            }
        }
    }

    TEST_CASE("domain and boundary queries") {
        const auto curve = BoundaryCurve::build(Exponent::classify(3.0), 32);
        CHECK_THROWS_AS(oracle_envelope(curve, 0.9, 0.9, EnvelopeKind::Concave), std::domain_error);
        CHECK_THROWS_AS(oracle_envelope(curve, 0.0, -0.1, EnvelopeKind::Concave), std::domain_error);
        CHECK(oracle_envelope(curve, 0.3, 0.0, EnvelopeKind::Concave) == 2.0);
        CHECK(oracle_envelope(curve, 0.6, 0.8, EnvelopeKind::Convex) == curve.arc_value(0.6));
    }

    TEST_CASE("restricted search agrees with the exhaustive search") {
        for (double value : {-1.0, 0.5, 1.5, 3.0}) {
            const auto curve = BoundaryCurve::build(Exponent::classify(value), 24);
            for (const auto& q : interior_grid(8)) {
                for (auto kind : {EnvelopeKind::Concave, EnvelopeKind::Convex}) {
                    const double r = oracle_envelope(curve, q.s, q.z, kind, SearchMode::Restricted);
                    const double e = oracle_envelope(curve, q.s, q.z, kind, SearchMode::Exhaustive);
                    CHECK(std::abs(r - e) <= 1e-12 * std::max(1.0, std::abs(e)));
                }
            }
        }
    }

    TEST_CASE("inner approximation of the closed form, converging with N") {
        for (double value : {-2.0, 0.5, 1.5, 3.0}) {
            const auto p = Exponent::classify(value);
            for (auto kind : {EnvelopeKind::Concave, EnvelopeKind::Convex}) {
                double previous = INFINITY;
                for (int n : {64, 256}) {
                    double worst = 0.0;
                    for (const auto& row : oracle_compare(p, n, 10, kind)) {
                        const double scale = std::max(1.0, std::abs(row.closed_form));
                        const double side = kind == EnvelopeKind::Concave ? row.closed_form - row.oracle
                                                                          : row.oracle - row.closed_form;
                        CHECK(side >= -1e-12 * scale);
                        worst = std::max(worst, row.abs_err / scale);
                    }
                    CHECK(worst <= previous);
                    previous = worst;
                }
            }
        }
    }
}

TEST_SUITE("empirical B") {
    TEST_CASE("sup and inf are attained and never cross the envelopes") {
        Rng rng(53);
        for (double value : {-1.0, 0.5, 1.5, 3.0}) {
            const auto p = Exponent::classify(value);
            for (int i = 0; i < 20; ++i) {
                const auto t = random_triple(rng, 2.0);
                if (t.z() == 0.0) continue;
                const double sup = empirical_B(p, t, Extremum::Sup, 50, 1);
                const double inf = empirical_B(p, t, Extremum::Inf, 50, 1);
                const double up = upper_envelope(p, t);
                const double lo = lower_envelope(p, t);
                CHECK(std::abs(sup - up) <= 1e-6 * std::max(1.0, up));
                CHECK(std::abs(inf - lo) <= 1e-6 * std::max(1.0, lo));
            }
        }
    }

    TEST_CASE("midpoint concavity of the empirical sup") {
        Rng rng(59);
        for (double value : {0.5, 1.5, 3.0}) {
            const auto p = Exponent::classify(value);
            for (int i = 0; i < 20; ++i) {
                const auto a = random_triple(rng, 2.0);
                const auto b = random_triple(rng, 2.0);
                const auto m = ConeTriple::make(0.5 * (a.x() + b.x()), 0.5 * (a.y() + b.y()), 0.5 * (a.z() + b.z()));
                const double lhs = empirical_B(p, m, Extremum::Sup, 20, 2);
                const double rhs = 0.5 * (empirical_B(p, a, Extremum::Sup, 20, 2) + empirical_B(p, b, Extremum::Sup, 20, 2));
                CHECK(lhs >= rhs - 1e-6 * std::max(1.0, rhs));
            }
        }
    }

    TEST_CASE("deterministic per seed") {
        const auto p = Exponent::classify(1.5);
        const auto t = ConeTriple::make(1.0, 0.6, 0.3);
        CHECK(empirical_B(p, t, Extremum::Sup, 100, 9) == empirical_B(p, t, Extremum::Sup, 100, 9));
    }
}
