#pragma once

#include <span>
#include <vector>

#include "lpenv/envelopes.hpp"

namespace lpenv {

/// Nonnegative piecewise-constant function on [0, 1].
///
/// Breakpoints 0 = t_0 < t_1 < ... < t_n = 1, one value per interval
/// [t_i, t_{i+1}). Values may be +inf; whether that is admissible depends on
/// the exponent used to measure it, so it is not checked here.
class StepFunction {
public:
    struct Segment {
        double length;
        double value;
    };

    /// Throws std::invalid_argument on a malformed partition or negative/NaN values.
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    static StepFunction constant(double value);

    /// Concatenates segments from 0 in order. Zero-length segments are
    /// dropped; the total length must be 1 up to 1e-12 and the last
    /// breakpoint is pinned to exactly 1.
    static StepFunction from_segments(std::span<const Segment> segments);

    [[nodiscard]] const std::vector<double>& breakpoints() const { return breakpoints_; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] double length(std::size_t i) const { return breakpoints_[i + 1] - breakpoints_[i]; }

    /// Same function on a finer partition: splits every interval at the
    /// given points (which must lie in (0, 1)).
    [[nodiscard]] StepFunction refined(std::span<const double> extra) const;

    /// Value on [t_i, t_{i+1}) containing x; x = 1 maps to the last interval.
    [[nodiscard]] double operator()(double x) const;

    friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

/// Functions on a shared partition.
struct CommonRefinement {
    std::vector<double> breakpoints;
    std::vector<std::vector<double>> values;  // one row per input function
};

CommonRefinement common_refinement(std::span<const StepFunction> functions);

/// int_0^1 f^p dx (the p-th power of the norm). May return +inf.
double pth_power_norm(const StepFunction& f, double p);

/// int_0^1 (fg)^{p/2} dx. For p < 0 the integrand vanishes where either
/// factor is +inf; for p > 0 it vanishes where either factor is 0.
double overlap_norm(const StepFunction& f, const StepFunction& g, double p);

/// int_0^1 (f + g)^p dx.
double sum_power_norm(const StepFunction& f, const StepFunction& g, double p);

/// int_0^1 (sum_j f_j)^p dx.
double family_sum_power_norm(std::span<const StepFunction> family, double p);
/// sum_j int f_j^p.
double family_moments(std::span<const StepFunction> family, double p);
/// sum_{i<j} int (f_i f_j)^{p/2}.
double family_overlaps(std::span<const StepFunction> family, double p);

/// (||f||_p^p, ||g||_p^p, ||fg||_{p/2}^{p/2}). Throws std::domain_error if
/// any component is not finite.
ConeTriple triple_of_pair(const StepFunction& f, const StepFunction& g, double p);

/// Actual ||f+g||_p^p against every bound that applies at the pair's triple.
struct BoundReport {
    double p;
    ConeTriple triple;
    bool has_actual;
    double actual;
    double upper;
    double lower;
    double carlen;
    bool carlen_upper;  // direction in which carlen applies
    // Signed slacks relative to max(1, |actual|) (or max(1, upper) without an
    // actual value). Nonnegative means the inequality holds.
    double upper_margin;
    double lower_margin;
    double carlen_margin;

    [[nodiscard]] double worst_margin() const;
    [[nodiscard]] bool holds(double tolerance) const { return worst_margin() >= -tolerance; }
};

/// Report for a bare triple: margins compare the envelopes with each other
/// (upper - lower) and with the Carlen bound (refinement direction).
BoundReport report_for_triple(const Exponent& p, const ConeTriple& t);

BoundReport sum_and_report(const StepFunction& f, const StepFunction& g, const Exponent& p);

}  // namespace lpenv
