#include "lpenv/envelopes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lpenv/power.hpp"

namespace lpenv {

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::ConcaveF: return "concave_F";
        case Regime::ConcaveG: return "concave_G";
    }
    return "unknown";
}

Exponent Exponent::classify(double p, double min_abs) {
    if (!std::isfinite(p)) throw std::invalid_argument("exponent must be finite");
    if (p == 0.0) throw std::invalid_argument("exponent p = 0 is excluded");
    if (std::abs(p) < min_abs) {
        std::ostringstream msg;
        msg << "|p| = " << std::abs(p) << " is below the minimum " << min_abs;
        throw std::invalid_argument(msg.str());
    }
    const bool concave_f = (p > 0.0 && p <= 1.0) || p >= 2.0;
    return Exponent(p, concave_f ? Regime::ConcaveF : Regime::ConcaveG);
}

ConeTriple ConeTriple::make(double x, double y, double z, double slack) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
        throw std::invalid_argument("cone triple components must be finite");
    }
    if (x < 0.0 || y < 0.0 || z < 0.0) {
        throw std::invalid_argument("cone triple components must be nonnegative");
    }
    const double root = std::sqrt(x * y);
    if (z > root) {
        if (z - root > slack * 0.5 * (x + y)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "z = " << z << " exceeds sqrt(xy) = " << root;
            throw std::invalid_argument(msg.str());
        }
        z = root;
    }
    return ConeTriple(x, y, z);
}

bool ConeTriple::on_upper_boundary() const { return z_ == std::sqrt(x_ * y_); }

DerivedRatios derived_ratios(const ConeTriple& t) {
    const double sum = t.x() + t.y();
    const double gamma = sum > 0.0 ? std::min(1.0, 2.0 * t.z() / sum) : 0.0;
    double v = 1.0;
    if (t.z() > 0.0) v = std::min(1.0, std::min(t.x(), t.y()) / t.z());
    return {gamma, v, gamma, v};
}

double boundary_value(const Exponent& p, double x, double y) {
    return power_sum(x, y, p.value());
}

double refined_factor(const Exponent& p, double gamma) {
    const double w = std::clamp(gamma, 0.0, 1.0);
    // sqrt(1 - w^2) as sqrt((1-w)(1+w)); 1 - r recovered as w^2 / (1 + r).
    const double r = std::sqrt((1.0 - w) * (1.0 + w));
    const double hi = 1.0 + r;
    const double lo = w * w / hi;
    return 0.5 * power_sum(hi, lo, p.value());
}

double eval_F(const Exponent& p, const ConeTriple& t) {
    const double sum = t.x() + t.y();
    if (sum == 0.0) return 0.0;
    return sum * refined_factor(p, 2.0 * t.z() / sum);
}

double eval_G(const Exponent& p, const ConeTriple& t) {
    const double x = t.x();
    const double y = t.y();
    const double z = t.z();
    const double q = p.value();
    if (z == 0.0) return q > 0.0 ? x + y : 0.0;
    const double v = std::min(1.0, std::min(x, y) / z);
    if (v == 1.0) return q > 0.0 ? x + y + (std::exp2(q) - 2.0) * z : std::exp2(q) * z;
    if (q > 0.0) {
        // (v^{1/p} + v^{-1/p})^p = v^{-1} (1 + v^{2/p})^p
        const double excess = std::expm1(q * std::log1p(std::pow(v, 2.0 / q)));
        return x + y - z * v + (z / v) * excess;
    }
    // (v^{1/p} + v^{-1/p})^p = v (1 + v^{-2/p})^p, with v^{-2/p} <= 1
    return z * v * std::exp(q * std::log1p(std::pow(v, -2.0 / q)));
}

double upper_envelope(const Exponent& p, const ConeTriple& t) {
    return p.regime() == Regime::ConcaveF ? eval_F(p, t) : eval_G(p, t);
}

double lower_envelope(const Exponent& p, const ConeTriple& t) {
    return p.regime() == Regime::ConcaveF ? eval_G(p, t) : eval_F(p, t);
}

double carlen_factor(const Exponent& p, double gamma) {
    const double q = p.value();
    const double g = std::clamp(gamma, 0.0, 1.0);
    return ext_pow(1.0 + ext_pow(g, 2.0 / q), q - 1.0);
}

double carlen_bound(const Exponent& p, const ConeTriple& t) {
    const double sum = t.x() + t.y();
    if (sum == 0.0) return 0.0;
    return carlen_factor(p, 2.0 * t.z() / sum) * sum;
}

bool refinement_is_upper(const Exponent& p) { return p.regime() == Regime::ConcaveF; }

bool carlen_is_upper(const Exponent& p) { return p.regime() == Regime::ConcaveF; }

InequalitySides two_point(double q, double x) {
    if (!std::isfinite(q)) throw std::invalid_argument("two_point: q must be finite");
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("two_point: x must lie in [0, 1]");
    const double lhs = 0.5 * (ext_pow(1.0 + x, q) + ext_pow(1.0 - x, q));
    const double rhs = ext_pow(0.5 * (1.0 + ext_pow((1.0 - x) * (1.0 + x), q)), 1.0 - q);
    return {lhs, rhs};
}

InequalitySides scalar_three_term(double a, double b, const Exponent& p) {
    if (!(a >= 0.0) || !(b >= 0.0)) {
        throw std::invalid_argument("scalar_three_term: a and b must be nonnegative");
    }
    const double q = p.value();
    const double lhs = ext_pow(a + b, q);
    const double rhs =
        ext_pow(a, q) + ext_pow(b, q) + (std::exp2(q) - 2.0) * ext_pow(a * b, 0.5 * q);
    return {lhs, rhs};
}

double sum_bound(double moments, double overlaps, const Exponent& p) {
    if (!p.positive()) {
        throw std::domain_error("sum_bound: the many-function bound fails for p < 0");
    }
    if (!std::isfinite(moments) || !std::isfinite(overlaps)) {
        throw std::invalid_argument("sum_bound: sums must be finite");
    }
    return moments + (std::exp2(p.value()) - 2.0) * overlaps;
}

InequalitySides pointwise_sum_terms(std::span<const double> a, const Exponent& p) {
    const double q = p.value();
    CompensatedSum total;
    CompensatedSum powers;
    CompensatedSum cross;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] >= 0.0)) throw std::invalid_argument("pointwise_sum_terms: a_j must be >= 0");
        total.add(a[i]);
        powers.add(ext_pow(a[i], q));
        for (std::size_t j = i + 1; j < a.size(); ++j) cross.add(ext_pow(a[i] * a[j], 0.5 * q));
    }
    return {ext_pow(total.value(), q), powers.value() + (std::exp2(q) - 2.0) * cross.value()};
}

}  // namespace lpenv
