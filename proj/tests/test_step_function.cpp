#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lpenv/json_io.hpp"
#include "lpenv/sampling.hpp"
#include "lpenv/step_function.hpp"

using namespace lpenv;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

StepFunction halves(double left, double right) { return StepFunction({0.0, 0.5, 1.0}, {left, right}); }

}  // namespace

TEST_SUITE("step function") {
    TEST_CASE("validation") {
        CHECK_THROWS_AS(StepFunction({0.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
        CHECK_THROWS_AS(StepFunction({0.1, 1.0}, {1.0}), std::invalid_argument);
        CHECK_THROWS_AS(StepFunction({0.0, 0.6, 0.6, 1.0}, {1.0, 1.0, 1.0}), std::invalid_argument);
        CHECK_THROWS_AS(StepFunction({0.0, 1.0}, {-1.0}), std::invalid_argument);
        CHECK_THROWS_AS(StepFunction({0.0, 1.0}, {std::nan("")}), std::invalid_argument);
        CHECK_NOTHROW(StepFunction({0.0, 1.0}, {kInf}));
    }

    TEST_CASE("evaluation and segments") {
        const auto f = StepFunction({0.0, 0.25, 1.0}, {3.0, 1.0});
        CHECK(f(0.0) == 3.0);
        CHECK(f(0.25) == 1.0);
        CHECK(f(1.0) == 1.0);
        const StepFunction::Segment segs[] = {{0.25, 3.0}, {0.0, 9.0}, {0.75, 1.0}};
        CHECK(StepFunction::from_segments(segs) == f);
        const StepFunction::Segment short_segs[] = {{0.25, 3.0}, {0.5, 1.0}};
        CHECK_THROWS_AS(StepFunction::from_segments(short_segs), std::invalid_argument);
    }

    TEST_CASE("common refinement") {
        const StepFunction fs[] = {halves(1.0, 2.0), StepFunction({0.0, 0.25, 1.0}, {5.0, 6.0})};
        const auto r = common_refinement(fs);
        CHECK(r.breakpoints == std::vector<double>{0.0, 0.25, 0.5, 1.0});
        CHECK(r.values[0] == std::vector<double>{1.0, 1.0, 2.0});
        CHECK(r.values[1] == std::vector<double>{5.0, 6.0, 6.0});
    }
}

TEST_SUITE("norms") {
    TEST_CASE("pair with known triple and sum") {
        const auto f = halves(2.0, 0.0);
        const auto g = StepFunction::constant(1.0);
        const auto t = triple_of_pair(f, g, 3.0);
        CHECK(close_rel(t.x(), 4.0, 1e-15));
        CHECK(close_rel(t.y(), 1.0, 1e-15));
        CHECK(close_rel(t.z(), std::sqrt(2.0), 1e-15));
        CHECK(close_rel(sum_power_norm(f, g, 3.0), 14.0, 1e-15));
        const auto report = sum_and_report(f, g, Exponent::classify(3.0));
        CHECK(close_rel(report.upper, 14.140040972450086, 1e-14));
        CHECK(close_rel(report.lower, 13.541966305589219, 1e-14));
        CHECK(report.lower <= report.actual);
        CHECK(report.actual <= report.upper);
        CHECK(report.carlen >= report.actual);
        CHECK(report.holds(1e-12));
    }

    TEST_CASE("negative exponent conventions") {
        const auto f = StepFunction::constant(1.0);
        const auto g = halves(kInf, 1.0);
        CHECK(pth_power_norm(g, -1.0) == 0.5);
        CHECK(overlap_norm(f, g, -1.0) == 0.5);
        CHECK(sum_power_norm(f, g, -1.0) == 0.25);
        CHECK(pth_power_norm(halves(0.0, 1.0), -1.0) == kInf);
        CHECK_THROWS_AS(triple_of_pair(halves(0.0, 1.0), f, -1.0), std::domain_error);
        // G_{-1}(1, 1/2, 1/2) = 1/4 is attained by this pair.
        const auto report = sum_and_report(f, g, Exponent::classify(-1.0));
        CHECK(close_rel(report.upper, 0.25, 1e-15));
        CHECK(report.holds(1e-12));
    }

    TEST_CASE("overlap vanishes on disjoint supports for p > 0") {
        CHECK(overlap_norm(halves(1.0, 0.0), halves(0.0, 1.0), 1.5) == 0.0);
    }

    TEST_CASE("refinement does not change any norm") {
        Rng rng(41);
        const double extra[] = {0.1, 0.33, 0.77, 0.9};
        for (double p : {-1.5, 0.7, 1.5, 3.0}) {
            for (int i = 0; i < 100; ++i) {
                const auto f = random_step_function(rng, p);
                const auto g = random_step_function(rng, p);
                const auto fr = f.refined(extra);
                const auto gr = g.refined(extra);
                for (double a : {0.0, 0.1, 0.33, 0.5, 0.9, 0.999}) CHECK(fr(a) == f(a));
                const double pairs[][2] = {{pth_power_norm(f, p), pth_power_norm(fr, p)},
                                           {overlap_norm(f, g, p), overlap_norm(fr, gr, p)},
                                           {sum_power_norm(f, g, p), sum_power_norm(fr, gr, p)}};
                for (const auto& pr : pairs) {
                    if (std::isinf(pr[0])) {
                        CHECK(pr[1] == pr[0]);
                    } else {
                        CHECK(close_rel(pr[0], pr[1], 1e-15));
                    }
                }
            }
        }
    }

    TEST_CASE("computed triples satisfy Cauchy-Schwarz") {
        Rng rng(43);
        for (double p : {-2.0, -0.5, 0.5, 1.5, 4.0}) {
            for (int i = 0; i < 300; ++i) {
                const auto f = random_step_function(rng, p);
                const auto g = random_step_function(rng, p);
                const double x = pth_power_norm(f, p);
                const double y = pth_power_norm(g, p);
                if (!std::isfinite(x) || !std::isfinite(y)) continue;
                CHECK(overlap_norm(f, g, p) <= std::sqrt(x * y) * (1.0 + 1e-12));
                CHECK_NOTHROW(triple_of_pair(f, g, p));
            }
        }
    }

    TEST_CASE("family helpers") {
        const StepFunction fam[] = {StepFunction::constant(1.0), StepFunction::constant(1.0),
                                    StepFunction::constant(1.0)};
        CHECK(family_sum_power_norm(fam, 2.0) == 9.0);
        CHECK(family_moments(fam, 2.0) == 3.0);
        CHECK(family_overlaps(fam, 2.0) == 3.0);
        CHECK(close_rel(family_sum_power_norm(fam, -1.0), 1.0 / 3.0, 1e-15));
    }
}

TEST_SUITE("json") {
    TEST_CASE("round trip with inf") {
        const auto f = StepFunction({0.0, 0.1, 0.6180339887498949, 1.0}, {kInf, 0.0, 1.0 / 3.0});
        const auto j = to_json(f);
        CHECK(j["values"][0] == "inf");
        const auto back = step_function_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back == f);
    }

    TEST_CASE("malformed input") {
        using nlohmann::json;
        CHECK_THROWS_AS(step_function_from_json(json::parse(R"({"values": [1]})")), std::invalid_argument);
        CHECK_THROWS_AS(step_function_from_json(json::parse(R"({"breakpoints": [0, 1], "values": ["x"]})")),
                        std::invalid_argument);
        CHECK_THROWS_AS(step_function_from_json(json::parse(R"({"breakpoints": [0, 1], "values": [1, 2]})")),
                        std::invalid_argument);
        CHECK_THROWS_AS(step_function_from_json(json::parse("[1, 2]")), std::invalid_argument);
    }

    TEST_CASE("report fields") {
        const auto r = report_for_triple(Exponent::classify(2.0), ConeTriple::make(1.0, 1.0, 0.5));
        const auto j = to_json(r);
        CHECK(j["upper"] == 3.0);
        CHECK(j["lower"] == 3.0);
        CHECK(j["actual"].is_null());
        CHECK(number_to_json(kInf) == "inf");
    }
}
