#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpenv/oracle.hpp"

namespace lpenv {

/// Exponents used by the randomized pair checks.
const std::vector<double>& default_p_grid();

/// Outcome of one invariant suite. `worst_margin` is the smallest signed
/// relative slack observed (negative means a violation).
struct SuiteReport {
    std::string suite;
    long long checked = 0;
    long long violations = 0;
    double worst_margin = 0.0;
    std::vector<std::string> notes;

    [[nodiscard]] bool passed() const { return violations == 0; }
};

struct PairSuiteOptions {
    std::uint64_t seed = 7;
    long long samples = 100000;
    std::vector<double> p_grid = default_p_grid();
    double tolerance = 1e-9;
    int threads = 0;  // 0: hardware concurrency
};

/// lower <= ||f+g||_p^p <= upper for random step-function pairs, cycling
/// through the p grid. Batches of 1000 samples use derived seeds, so the
/// result does not depend on the thread count.
SuiteReport verify_pairs(const PairSuiteOptions& options);

struct SumSuiteOptions {
    std::uint64_t seed = 7;
    long long samples = 2000;
    double tolerance = 1e-9;
    bool negative_counterexample = false;
};

/// Many-function bound for families of 3..8 random functions: upper bound for
/// p in {1, 1.5, 2}, lower bound for p in {0.5, 1, 2, 3}. Optionally also
/// reproduces the three-unit-constants failure at p = -1.
SuiteReport verify_sums(const SumSuiteOptions& options);

inline constexpr double kFirstDerivativeStep = 1e-5;
inline constexpr double kSecondDerivativeStep = 1e-4;
inline constexpr double kDerivativeTolerance = 1e-6;

struct DerivativeCheck {
    std::string name;
    double t;
    double exact;
    double numeric;
    double relative_error;  // |exact - numeric| / max(1, |exact|)
};

/// Closed-form h', h'', h~', h~'' against fourth-order central differences
/// at t in {0.2, 0.5, 0.9}.
std::vector<DerivativeCheck> derivative_checks(const Exponent& p);

/// Sign tables for v, g, h'', h~'', exact zeros, closed-form derivatives
/// against finite differences, and torsion crossings.
SuiteReport verify_analysis(int points = 1000);

struct OracleSuiteOptions {
    int resolution = 512;
    int grid = 20;
    std::vector<double> p_grid = default_p_grid();
    double tolerance = 2e-2;
};

SuiteReport verify_oracle(const OracleSuiteOptions& options);

/// Interior grid of the half-disc: s_i = -1 + (2i + 1)/n,
/// z_ij = (j + 1/2)/n * sqrt(1 - s_i^2).
struct SectionPoint {
    double s;
    double z;
};
std::vector<SectionPoint> interior_grid(int n);

struct OracleRow {
    double p;
    double s;
    double z;
    double closed_form;
    double oracle;
    double abs_err;
    int resolution;
};

std::vector<OracleRow> oracle_compare(const Exponent& p, int resolution, int grid, EnvelopeKind kind);

struct TableRow {
    double p;
    double s;
    double z;
    double F;
    double G;
    double upper;
    double lower;
    double carlen;
};

/// Envelope values on a grid x grid lattice of the cross-section
/// x + y = 2 (s in [-1, 1], z from 0 to sqrt(1 - s^2)), ordered by p, s, z.
std::vector<TableRow> envelope_table(const std::vector<double>& p_list, int grid);

/// Formats a double with 17 significant digits.
std::string format_number(double value);

}  // namespace lpenv
