#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lpenv/sampling.hpp"
#include "lpenv/verify.hpp"

using namespace lpenv;

TEST_SUITE("sampling") {
    TEST_CASE("derived seeds are stable and distinct") {
        CHECK(derive_seed(7, 0) == derive_seed(7, 0));
        CHECK(derive_seed(7, 0) != derive_seed(7, 1));
        CHECK(derive_seed(7, 0) != derive_seed(8, 0));
        Rng a = make_rng(3, 4);
        Rng b = make_rng(3, 4);
        CHECK(random_step_function(a, 1.5) == random_step_function(b, 1.5));
    }

    TEST_CASE("random triples lie in the cone") {
        Rng rng(1);
        for (int i = 0; i < 1000; ++i) {
            const auto t = random_triple(rng, 2.0);
            CHECK(t.z() * t.z() <= t.x() * t.y() * (1 + 1e-12));
        }
    }
}

TEST_SUITE("suites") {
    TEST_CASE("pair suite is independent of the thread count") {
        PairSuiteOptions options;
        options.samples = 5000;
        options.threads = 1;
        const auto single = verify_pairs(options);
        options.threads = 4;
        const auto multi = verify_pairs(options);
        CHECK(single.passed());
        CHECK(single.checked == 5000);
        CHECK(single.worst_margin == multi.worst_margin);
        CHECK(single.violations == multi.violations);
    }

    TEST_CASE("sum suite reproduces the negative-exponent counterexample") {
        SumSuiteOptions options;
        options.samples = 300;
        options.negative_counterexample = true;
        const auto report = verify_sums(options);
        CHECK(report.passed());
        CHECK(report.notes.back().find("counterexample reproduced") != std::string::npos);
    }

    TEST_CASE("interior grid stays inside the half-disc") {
        for (const auto& q : interior_grid(7)) {
            CHECK(q.z > 0.0);
            CHECK(q.s * q.s + q.z * q.z < 1.0);
        }
        CHECK(interior_grid(7).size() == 49);
    }

    TEST_CASE("envelope table ordering and spot values") {
        const auto rows = envelope_table({1.5, 3.0}, 3);
        REQUIRE(rows.size() == 18);
        CHECK(rows[0].p == 1.5);
        CHECK(rows[9].p == 3.0);
        // s = 0, z = 1 is the top of the arc where all envelopes meet.
        CHECK(rows[5].s == 0.0);
        CHECK(rows[5].upper == doctest::Approx(std::pow(2.0, 1.5)));
        CHECK(rows[5].lower == doctest::Approx(std::pow(2.0, 1.5)));
        CHECK_THROWS_AS(envelope_table({1.5}, 1), std::invalid_argument);
    }

    TEST_CASE("format_number keeps 17 significant digits") {
        CHECK(format_number(0.1) == "0.10000000000000001");
        CHECK(format_number(3.0) == "3");
        CHECK(format_number(-INFINITY) == "-inf");
    }
}
