#include "lpenv/power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lpenv {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

double ext_pow(double base, double exponent) {
    if (std::isnan(base) || std::isnan(exponent) || base < 0.0) return kNaN;
    if (exponent == 0.0) return 1.0;
    if (base == 0.0) return exponent > 0.0 ? 0.0 : kInf;
    if (std::isinf(base)) return exponent > 0.0 ? kInf : 0.0;
    return std::pow(base, exponent);
}

double power_sum(double a, double b, double p) {
    if (std::isnan(a) || std::isnan(b) || a < 0.0 || b < 0.0 || p == 0.0) return kNaN;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    if (p > 0.0) {
        if (hi == 0.0) return 0.0;
        if (std::isinf(hi)) return kInf;
        const double ratio = std::pow(lo / hi, 1.0 / p);
        return hi * std::exp(p * std::log1p(ratio));
    }
    // p < 0: the smaller argument dominates a^{1/p} + b^{1/p}.
    if (lo == 0.0) return 0.0;
    if (std::isinf(lo)) return kInf;
    if (std::isinf(hi)) return lo;
    const double ratio = std::pow(hi / lo, 1.0 / p);
    return lo * std::exp(p * std::log1p(ratio));
}

void CompensatedSum::add(double value) {
    if (!std::isfinite(value) || !std::isfinite(sum_)) {
        sum_ += value;
        compensation_ = 0.0;
        return;
    }
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
        compensation_ += (sum_ - t) + value;
    } else {
        compensation_ += (value - t) + sum_;
    }
    sum_ = t;
}

double compensated_sum(std::span<const double> values) {
    CompensatedSum acc;
    for (double v : values) acc.add(v);
    return acc.value();
}

}  // namespace lpenv
