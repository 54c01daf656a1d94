#pragma once

#include <span>

namespace lpenv {

/// Extended-real power for nonnegative bases.
///
/// Follows the conventions used for functions that may take the value +inf
/// when the exponent is negative:
///   pow(0, e < 0)   = +inf
///   pow(+inf, e < 0) = 0
///   pow(+inf, e > 0) = +inf
///   pow(x, 0)        = 1
/// Negative or NaN bases produce NaN.
double ext_pow(double base, double exponent);

/// (a^{1/p} + b^{1/p})^p for a, b >= 0, evaluated without overflow.
///
/// Factors out the dominant term (the larger one for p > 0, the smaller one
/// for p < 0) so the remaining ratio raised to 1/p stays in [0, 1]. Symmetric
/// in (a, b) bit-for-bit. Zero and infinite inputs follow ext_pow.
double power_sum(double a, double b, double p);

/// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double value);
    [[nodiscard]] double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

double compensated_sum(std::span<const double> values);

}  // namespace lpenv
