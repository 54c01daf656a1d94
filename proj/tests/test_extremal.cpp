#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lpenv/extremal.hpp"
#include "lpenv/sampling.hpp"

using namespace lpenv;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

void check_round_trip(const Exponent& p, const ConeTriple& t, const FunctionPair& pair) {
    const auto back = triple_of_pair(pair.f, pair.g, p.value());
    const double scale = std::max(1.0, t.x() + t.y());
    CHECK(std::abs(back.x() - t.x()) <= 1e-12 * scale);
    CHECK(std::abs(back.y() - t.y()) <= 1e-12 * scale);
    CHECK(std::abs(back.z() - t.z()) <= 1e-12 * scale);
}

}  // namespace

TEST_SUITE("extremal") {
    TEST_CASE("swap pair at p = 2") {
        const auto p = Exponent::classify(2.0);
        const auto pair = extremal_F(p, ConeTriple::make(1.0, 1.0, 0.5));
        const double big = (2.0 + std::sqrt(3.0)) / 2.0;
        CHECK(pair.f.breakpoints() == std::vector<double>{0.0, 0.5, 1.0});
        CHECK(close_rel(pair.f.values()[0] * pair.f.values()[0], big, 1e-15));
        CHECK(close_rel(pair.g.values()[0] * pair.g.values()[0], 0.25 / big, 1e-15));
        CHECK(close_rel(sum_power_norm(pair.f, pair.g, 2.0), 3.0, 1e-14));
    }

    TEST_CASE("two-block G pair") {
        const auto p = Exponent::classify(1.5);
        const auto pair = extremal_G(p, ConeTriple::make(1.0, 0.25, 0.4));
        const auto& f = pair.f.values();
        const auto& g = pair.g.values();
        CHECK(close_rel(std::pow(f[0], 1.5), 1.28, 1e-14));
        CHECK(close_rel(std::pow(g[0], 1.5), 0.5, 1e-14));
        CHECK(close_rel(std::pow(f[1], 1.5), 0.72, 1e-14));
        CHECK(g[1] == 0.0);
        CHECK(close_rel(sum_power_norm(pair.f, pair.g, 1.5), 1.5763933952917517, 1e-13));
    }

    TEST_CASE("triangular-cone G pair uses three blocks") {
        const auto p = Exponent::classify(3.0);
        const auto pair = extremal_G(p, ConeTriple::make(1.0, 0.8, 0.3));
        CHECK(pair.f.breakpoints() == std::vector<double>{0.0, 0.5, 0.75, 1.0});
        CHECK(pair.f.values()[2] == 0.0);
        CHECK(pair.g.values()[1] == 0.0);
        CHECK(pair.f.values()[0] == pair.g.values()[0]);
    }

    TEST_CASE("negative p uses +inf where p > 0 uses 0") {
        const auto p = Exponent::classify(-1.0);
        const auto t = ConeTriple::make(1.0, 0.5, 0.3);
        const auto pair = extremal_G(p, t);
        bool has_inf = false;
        for (double v : pair.f.values()) has_inf = has_inf || v == kInf;
        for (double v : pair.g.values()) has_inf = has_inf || v == kInf;
        CHECK(has_inf);
        check_round_trip(p, t, pair);
        CHECK(close_rel(sum_power_norm(pair.f, pair.g, -1.0), eval_G(p, t), 1e-12));
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(extremal_G_pos(Exponent::classify(-1.0), ConeTriple::make(1, 1, 0.5)), std::invalid_argument);
        CHECK_THROWS_AS(extremal_G_neg(Exponent::classify(1.5), ConeTriple::make(1, 1, 0.5)), std::invalid_argument);
        CHECK_THROWS_AS(extremal_G_neg(Exponent::classify(-1.5), ConeTriple::make(1, 1, 0.0)), std::domain_error);
    }

    TEST_CASE("degenerate triples") {
        for (double value : {-1.0, 0.5, 1.5, 3.0}) {
            const auto p = Exponent::classify(value);
            for (const auto& t : {ConeTriple::make(0, 0, 0), ConeTriple::make(2, 0, 0), ConeTriple::make(0, 3, 0),
                                  ConeTriple::make(1, 4, 2), ConeTriple::make(1, 1, 1)}) {
                if (value < 0 && (t.x() == 0 || t.y() == 0)) continue;
                const auto pair = extremal_F(p, t);
                check_round_trip(p, t, pair);
                CHECK(close_rel(sum_power_norm(pair.f, pair.g, value), eval_F(p, t), 1e-12));
                if (value > 0) {
                    const auto gp = extremal_G(p, t);
                    check_round_trip(p, t, gp);
                    CHECK(close_rel(sum_power_norm(gp.f, gp.g, value), eval_G(p, t), 1e-12));
                }
            }
        }
    }

    TEST_CASE("round trip and attainment over random triples") {
        Rng rng(31);
        for (double value : {-2.0, -0.5, 0.5, 1.3, 1.7, 3.0, 5.0}) {
            const auto p = Exponent::classify(value);
            for (int i = 0; i < 200; ++i) {
                const auto t = random_triple(rng, 2.0);
                const auto fp = extremal_F(p, t);
                check_round_trip(p, t, fp);
                CHECK(close_rel(sum_power_norm(fp.f, fp.g, value), eval_F(p, t), 1e-9));
                if (value < 0 && t.z() == 0.0) continue;
                const auto gp = extremal_G(p, t);
                check_round_trip(p, t, gp);
                CHECK(close_rel(sum_power_norm(gp.f, gp.g, value), eval_G(p, t), 1e-9));
                CHECK(sum_and_report(extremal_upper(p, t).f, extremal_upper(p, t).g, p).upper_margin > -1e-9);
            }
        }
    }

    TEST_CASE("swap pairs satisfy (fg)^{p/2} = k (f^p + g^p)") {
        Rng rng(37);
        for (double value : {0.5, 1.5, 3.0}) {
            const auto p = Exponent::classify(value);
            for (int i = 0; i < 100; ++i) {
                const auto t = random_triple(rng, 2.0);
                const auto pair = extremal_F(p, t);
                const StepFunction both[] = {pair.f, pair.g};
                const auto r = common_refinement(both);
                const double k = t.z() / (t.x() + t.y());
                for (std::size_t j = 0; j < r.breakpoints.size() - 1; ++j) {
                    const double f = r.values[0][j];
                    const double g = r.values[1][j];
                    const double lhs = std::pow(f * g, value / 2.0);
                    const double rhs = k * (std::pow(f, value) + std::pow(g, value));
                    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
                }
            }
        }
    }

    TEST_CASE("triangular-cone G pairs have f = g where both are positive") {
        Rng rng(39);
        for (double value : {0.5, 1.5, 3.0}) {
            const auto p = Exponent::classify(value);
            for (int i = 0; i < 100; ++i) {
                const auto t = random_triple(rng, 2.0);
                if (t.z() > std::min(t.x(), t.y())) continue;
                const auto pair = extremal_G_pos(p, t);
                const StepFunction both[] = {pair.f, pair.g};
                const auto r = common_refinement(both);
                for (std::size_t j = 0; j < r.breakpoints.size() - 1; ++j) {
                    const double f = r.values[0][j];
                    const double g = r.values[1][j];
                    if (f > 0 && g > 0) CHECK(f == g);
                }
            }
        }
    }
}
