#include "lpenv/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <stdexcept>

#include "lpenv/power.hpp"

namespace lpenv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> merge_breakpoints(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Values of f on the intervals of a partition that refines f's own.
std::vector<double> values_on(const StepFunction& f, const std::vector<double>& partition) {
    std::vector<double> out;
    out.reserve(partition.size() - 1);
    const auto& bp = f.breakpoints();
    std::size_t k = 0;
    for (std::size_t i = 0; i + 1 < partition.size(); ++i) {
        while (bp[k + 1] <= partition[i]) ++k;
        out.push_back(f.values()[k]);
    }
    return out;
}

double overlap_integrand(double f, double g, double p) {
    if (p < 0.0) {
        if (std::isinf(f) || std::isinf(g)) return 0.0;
    } else if (f == 0.0 || g == 0.0) {
        return 0.0;
    }
    return ext_pow(f, 0.5 * p) * ext_pow(g, 0.5 * p);
}

template <typename Integrand>
double integrate(const std::vector<double>& partition, Integrand&& integrand) {
    CompensatedSum acc;
    for (std::size_t i = 0; i + 1 < partition.size(); ++i) {
        const double value = integrand(i);
        if (value == 0.0) continue;
        acc.add((partition[i + 1] - partition[i]) * value);
    }
    return acc.value();
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.empty() || breakpoints_.size() != values_.size() + 1) {
        throw std::invalid_argument("step function needs n + 1 breakpoints for n values");
    }
    if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
        throw std::invalid_argument("step function partition must start at 0 and end at 1");
    }
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] < breakpoints_[i + 1])) {
            throw std::invalid_argument("step function breakpoints must be strictly increasing");
        }
    }
    for (double v : values_) {
        if (!(v >= 0.0)) throw std::invalid_argument("step function values must be nonnegative");
    }
}

StepFunction StepFunction::constant(double value) { return StepFunction({0.0, 1.0}, {value}); }

StepFunction StepFunction::from_segments(std::span<const Segment> segments) {
    std::vector<double> breakpoints{0.0};
    std::vector<double> values;
    double position = 0.0;
    for (const auto& seg : segments) {
        if (!(seg.length >= 0.0)) throw std::invalid_argument("segment length must be >= 0");
        if (seg.length == 0.0) continue;
        position += seg.length;
        breakpoints.push_back(position);
        values.push_back(seg.value);
    }
    if (values.empty() || std::abs(position - 1.0) > 1e-12) {
        throw std::invalid_argument("segments must cover [0, 1]");
    }
    breakpoints.back() = 1.0;
    // Rounding in the running sum can push an interior breakpoint onto 1.
    while (breakpoints.size() > 2 && breakpoints[breakpoints.size() - 2] >= 1.0) {
        breakpoints.erase(breakpoints.end() - 2);
        values.erase(values.end() - 2);
    }
    return StepFunction(std::move(breakpoints), std::move(values));
}

StepFunction StepFunction::refined(std::span<const double> extra) const {
    std::vector<double> points(extra.begin(), extra.end());
    for (double t : points) {
        if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("refinement points must lie in (0, 1)");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto partition = merge_breakpoints(breakpoints_, points);
    auto values = values_on(*this, partition);
    return StepFunction(std::move(partition), std::move(values));
}

double StepFunction::operator()(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw std::out_of_range("step function evaluated outside [0, 1]");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    auto index = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it));
    index = std::min(index, values_.size());
    return values_[index - 1];
}

CommonRefinement common_refinement(std::span<const StepFunction> functions) {
    CommonRefinement out;
    if (functions.empty()) return out;
    out.breakpoints = functions.front().breakpoints();
    for (const auto& f : functions.subspan(1)) {
        out.breakpoints = merge_breakpoints(out.breakpoints, f.breakpoints());
    }
    for (const auto& f : functions) out.values.push_back(values_on(f, out.breakpoints));
    return out;
}

double pth_power_norm(const StepFunction& f, double p) {
    if (p == 0.0) throw std::invalid_argument("pth_power_norm: p must be nonzero");
    return integrate(f.breakpoints(), [&](std::size_t i) { return ext_pow(f.values()[i], p); });
}

double overlap_norm(const StepFunction& f, const StepFunction& g, double p) {
    if (p == 0.0) throw std::invalid_argument("overlap_norm: p must be nonzero");
    const StepFunction pair[] = {f, g};
    const auto common = common_refinement(pair);
    return integrate(common.breakpoints, [&](std::size_t i) {
        return overlap_integrand(common.values[0][i], common.values[1][i], p);
    });
}

double sum_power_norm(const StepFunction& f, const StepFunction& g, double p) {
    const StepFunction pair[] = {f, g};
    return family_sum_power_norm(pair, p);
}

double family_sum_power_norm(std::span<const StepFunction> family, double p) {
    if (p == 0.0) throw std::invalid_argument("family_sum_power_norm: p must be nonzero");
    if (family.empty()) return ext_pow(0.0, p);
    const auto common = common_refinement(family);
    return integrate(common.breakpoints, [&](std::size_t i) {
        double total = 0.0;
        for (const auto& row : common.values) total += row[i];
        return ext_pow(total, p);
    });
}

double family_moments(std::span<const StepFunction> family, double p) {
    CompensatedSum acc;
    for (const auto& f : family) acc.add(pth_power_norm(f, p));
    return acc.value();
}

double family_overlaps(std::span<const StepFunction> family, double p) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) acc.add(overlap_norm(family[i], family[j], p));
    }
    return acc.value();
}

ConeTriple triple_of_pair(const StepFunction& f, const StepFunction& g, double p) {
    const double x = pth_power_norm(f, p);
    const double y = pth_power_norm(g, p);
    const double z = overlap_norm(f, g, p);
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
        throw std::domain_error("pair has an infinite p-th power norm");
    }
    return ConeTriple::make(x, y, z);
}

double BoundReport::worst_margin() const {
    return std::min({upper_margin, lower_margin, carlen_margin});
}

BoundReport report_for_triple(const Exponent& p, const ConeTriple& t) {
    const double upper = upper_envelope(p, t);
    const double lower = lower_envelope(p, t);
    const double carlen = carlen_bound(p, t);
    const double scale = std::max(1.0, std::abs(upper));
    const bool carlen_upper = carlen_is_upper(p);
    // The refined bound is the F envelope; it sits inside the Carlen bound.
    const double refined = eval_F(p, t);
    const double refinement_margin =
        refinement_is_upper(p) ? (carlen - refined) / scale : (refined - carlen) / scale;
    return BoundReport{p.value(), t,     false, std::numeric_limits<double>::quiet_NaN(),
                       upper,     lower, carlen, carlen_upper,
                       (upper - lower) / scale, (upper - lower) / scale, refinement_margin};
}

BoundReport sum_and_report(const StepFunction& f, const StepFunction& g, const Exponent& p) {
    const auto t = triple_of_pair(f, g, p.value());
    const double actual = sum_power_norm(f, g, p.value());
    if (!std::isfinite(actual)) throw std::domain_error("||f+g||_p^p is not finite");
    const double upper = upper_envelope(p, t);
    const double lower = lower_envelope(p, t);
    const double carlen = carlen_bound(p, t);
    const bool carlen_upper = carlen_is_upper(p);
    const double scale = std::max(1.0, std::abs(actual));
    return BoundReport{p.value(),
                       t,
                       true,
                       actual,
                       upper,
                       lower,
                       carlen,
                       carlen_upper,
                       (upper - actual) / scale,
                       (actual - lower) / scale,
                       carlen_upper ? (carlen - actual) / scale : (actual - carlen) / scale};
}

}  // namespace lpenv
