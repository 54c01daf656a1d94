#include "lpenv/extremal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lpenv/power.hpp"

namespace lpenv {

namespace {

using Segment = StepFunction::Segment;

// Inverse of u -> u^p on [0, inf] under the extended conventions.
double root_of(double power, const Exponent& p) { return ext_pow(power, 1.0 / p.value()); }

FunctionPair swapped(FunctionPair pair) { return {std::move(pair.g), std::move(pair.f)}; }

// Value standing in for "no mass": 0 when p > 0, +inf when p < 0.
double null_value(const Exponent& p) {
    return p.positive() ? 0.0 : std::numeric_limits<double>::infinity();
}

FunctionPair extremal_G_impl(const Exponent& p, const ConeTriple& t) {
    const double x = t.x();
    const double y = t.y();
    const double z = t.z();
    const double null = null_value(p);
    if (z <= std::min(x, y)) {
        const double a = root_of(2.0 * z, p);
        const double b = root_of(4.0 * (x - z), p);
        const double c = root_of(4.0 * (y - z), p);
        const std::array<Segment, 3> f{{{0.5, a}, {0.25, b}, {0.25, null}}};
        const std::array<Segment, 3> g{{{0.5, a}, {0.25, null}, {0.25, c}}};
        return {StepFunction::from_segments(f), StepFunction::from_segments(g)};
    }
    if (x < y) return swapped(extremal_G_impl(p, t.swapped()));
    // y = min(x, y) < z <= sqrt(xy)
    const double ratio = z * z / y;
    const double a = root_of(2.0 * ratio, p);
    const double b = root_of(2.0 * y, p);
    const double c = root_of(std::max(0.0, 2.0 * x - 2.0 * ratio), p);
    const std::array<Segment, 2> f{{{0.5, a}, {0.5, c}}};
    const std::array<Segment, 2> g{{{0.5, b}, {0.5, null}}};
    return {StepFunction::from_segments(f), StepFunction::from_segments(g)};
}

}  // namespace

FunctionPair extremal_F(const Exponent& p, const ConeTriple& t) {
    const double x = t.x();
    const double y = t.y();
    const double z = t.z();
    const double sum = x + y;
    if (sum == 0.0) {
        const double null = null_value(p);
        return {StepFunction::constant(null), StepFunction::constant(null)};
    }
    // a^p and b^p are the roots of T^2 - (x+y) T + z^2.
    const double spread = std::sqrt(std::max(0.0, (sum - 2.0 * z) * (sum + 2.0 * z)));
    const double big = 0.5 * (sum + spread);
    const double small = z * z / big;
    const double c = spread > 0.0 ? std::clamp(0.5 + (x - y) / (2.0 * spread), 0.0, 1.0) : 0.5;
    const double a = root_of(big, p);
    const double b = root_of(small, p);
    const std::array<Segment, 2> f{{{c, a}, {1.0 - c, b}}};
    const std::array<Segment, 2> g{{{c, b}, {1.0 - c, a}}};
    return {StepFunction::from_segments(f), StepFunction::from_segments(g)};
}

FunctionPair extremal_G_pos(const Exponent& p, const ConeTriple& t) {
    if (!p.positive()) throw std::invalid_argument("extremal_G_pos requires p > 0");
    return extremal_G_impl(p, t);
}

FunctionPair extremal_G_neg(const Exponent& p, const ConeTriple& t) {
    if (p.positive()) throw std::invalid_argument("extremal_G_neg requires p < 0");
    if (t.z() == 0.0) {
        throw std::domain_error("G_p = 0 at z = 0 is a limit, not attained by a pair");
    }
    return extremal_G_impl(p, t);
}

FunctionPair extremal_G(const Exponent& p, const ConeTriple& t) {
    return p.positive() ? extremal_G_pos(p, t) : extremal_G_neg(p, t);
}

FunctionPair extremal_upper(const Exponent& p, const ConeTriple& t) {
    return p.regime() == Regime::ConcaveF ? extremal_F(p, t) : extremal_G(p, t);
}

FunctionPair extremal_lower(const Exponent& p, const ConeTriple& t) {
    return p.regime() == Regime::ConcaveF ? extremal_G(p, t) : extremal_F(p, t);
}

}  // namespace lpenv
