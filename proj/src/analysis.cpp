#include "lpenv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lpenv/power.hpp"

namespace lpenv::analysis {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_unit_interval(double t, bool allow_zero, const char* what) {
    if (!(t <= 1.0 && (allow_zero ? t >= 0.0 : t > 0.0))) {
        throw std::invalid_argument(std::string(what) + ": argument outside its domain");
    }
}

struct Vec3 {
    double x;
    double y;
    double z;
};

Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double frenet_torsion(Vec3 d1, Vec3 d2, Vec3 d3) {
    const Vec3 n = cross(d1, d2);
    const double norm2 = dot(n, n);
    const double value = dot(n, d3) / norm2;
    return std::isfinite(value) ? value : kNaN;
}

}  // namespace

int sign_of(double value, double threshold) {
    if (std::abs(value) < threshold) return 0;
    return value > 0.0 ? 1 : -1;
}

double v_fn(double x, const Exponent& p) {
    require_unit_interval(x, true, "v_fn");
    const double q = p.value();
    const double k = 2.0 / q - 1.0;
    return ext_pow(x, 2.0 / q - 1.0) + k * ext_pow(x, 1.0 / q - 1.0) * (1.0 - x) - 1.0;
}

double g_fn(double x, const Exponent& p) {
    require_unit_interval(x, true, "g_fn");
    const double q = p.value();
    return (1.0 + (2.0 / q - 1.0) * x) - std::pow(1.0 + x, 2.0 - q);
}

double h_fn(double t, const Exponent& p) {
    require_unit_interval(t, false, "h_fn");
    return h_tilde_fn(t, p) - (t + 1.0 / t);
}

double h_d1(double t, const Exponent& p) {
    require_unit_interval(t, false, "h_d1");
    return h_tilde_d1(t, p) - (1.0 - 1.0 / (t * t));
}

double h_d2(double t, const Exponent& p) {
    require_unit_interval(t, false, "h_d2");
    const double q = p.value();
    const double x = std::pow(t, 2.0 / q);
    return 2.0 / (t * t * t) * (std::pow(1.0 + x, q - 2.0) * (1.0 + (2.0 / q - 1.0) * x) - 1.0);
}

double h_tilde_fn(double t, const Exponent& p) {
    require_unit_interval(t, false, "h_tilde_fn");
    return power_sum(t, 1.0 / t, p.value());
}

double h_tilde_d1(double t, const Exponent& p) {
    require_unit_interval(t, false, "h_tilde_d1");
    const double q = p.value();
    const double a = 1.0 / q;
    const double sum = std::pow(t, a) + std::pow(t, -a);
    return std::pow(sum, q - 1.0) * (std::pow(t, a - 1.0) - std::pow(t, -a - 1.0));
}

double h_tilde_d2(double t, const Exponent& p) {
    require_unit_interval(t, false, "h_tilde_d2");
    const double q = p.value();
    const double a = 1.0 / q;
    const double sum = std::pow(t, a) + std::pow(t, -a);
    return 2.0 / (t * t) * std::pow(sum, q - 2.0) * (std::pow(t, -2.0 * a) + (2.0 * a - 1.0));
}

double central_d1(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

double central_d2(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

double central_d3(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 3 * h) + 8 * f(x + 2 * h) - 13 * f(x + h) + 13 * f(x - h) - 8 * f(x - 2 * h) +
            f(x - 3 * h)) /
           (8 * h * h * h);
}

CurvePoint boundary_curve(double s, const Exponent& p) {
    if (!(s >= -1.0 && s <= 1.0)) throw std::invalid_argument("boundary_curve: s outside [-1, 1]");
    return {s, std::sqrt((1.0 - s) * (1.0 + s)), power_sum(1.0 - s, 1.0 + s, p.value())};
}

double torsion(double s, const Exponent& p) {
    if (!(s > -1.0 && s < 1.0)) throw std::invalid_argument("torsion: s must lie in (-1, 1)");
    const double margin = 1.0 - std::abs(s);
    const double h_low = std::min(1e-5, margin / 4.0);
    const double h_third = std::min(1e-3, margin / 4.0);
    auto component = [&](int which) {
        return [&p, which](double u) {
            const auto c = boundary_curve(u, p);
            return which == 0 ? c.x : which == 1 ? c.y : c.z;
        };
    };
    Vec3 d1{};
    Vec3 d2{};
    Vec3 d3{};
    double* slots1[] = {&d1.x, &d1.y, &d1.z};
    double* slots2[] = {&d2.x, &d2.y, &d2.z};
    double* slots3[] = {&d3.x, &d3.y, &d3.z};
    for (int i = 0; i < 3; ++i) {
        const std::function<double(double)> f = component(i);
        *slots1[i] = central_d1(f, s, h_low);
        *slots2[i] = central_d2(f, s, h_low);
        *slots3[i] = central_d3(f, s, h_third);
    }
    return frenet_torsion(d1, d2, d3);
}

double torsion_exact(double s, const Exponent& p) {
    if (!(s > -1.0 && s < 1.0)) throw std::invalid_argument("torsion_exact: s must lie in (-1, 1)");
    const double q = p.value();
    const double a = 1.0 / q;
    const double lo = 1.0 - s;
    const double hi = 1.0 + s;
    // S = (1-s)^a + (1+s)^a, phi = S^p
    const double S = std::pow(lo, a) + std::pow(hi, a);
    const double S1 = a * (std::pow(hi, a - 1) - std::pow(lo, a - 1));
    const double S2 = a * (a - 1) * (std::pow(hi, a - 2) + std::pow(lo, a - 2));
    const double S3 = a * (a - 1) * (a - 2) * (std::pow(hi, a - 3) - std::pow(lo, a - 3));
    const double phi1 = q * std::pow(S, q - 1) * S1;
    const double phi2 = q * (q - 1) * std::pow(S, q - 2) * S1 * S1 + q * std::pow(S, q - 1) * S2;
    const double phi3 = q * (q - 1) * (q - 2) * std::pow(S, q - 3) * S1 * S1 * S1 +
                        3 * q * (q - 1) * std::pow(S, q - 2) * S1 * S2 + q * std::pow(S, q - 1) * S3;
    // c = sqrt(1 - s^2)
    const double c = std::sqrt(lo * hi);
    const double c1 = -s / c;
    const double c2 = -1.0 / (c * c * c);
    const double c3 = -3.0 * s / (c * c * c * c * c);
    return frenet_torsion({1.0, c1, phi1}, {0.0, c2, phi2}, {0.0, c3, phi3});
}

std::string_view to_string(Crossing crossing) {
    switch (crossing) {
        case Crossing::MinusToPlus: return "minus_to_plus";
        case Crossing::PlusToMinus: return "plus_to_minus";
        case Crossing::None: return "none";
    }
    return "none";
}

SignChangeReport torsion_sign_changes(const Exponent& p, int grid) {
    if (grid < 64) throw std::invalid_argument("torsion_sign_changes: grid must be >= 64");
    if (p.is_boundary()) throw std::invalid_argument("torsion_sign_changes: p must not be 1 or 2");
    constexpr double kMargin = 1e-3;
    const double lo = -1.0 + kMargin;
    const double step = 2.0 * (1.0 - kMargin) / (grid - 1);

    SignChangeReport report{0, kNaN, Crossing::None};
    int last_sign = 0;
    double last_s = 0.0;
    double last_value = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double s = i == grid - 1 ? 1.0 - kMargin : lo + i * step;
        const double value = torsion(s, p);
        if (!std::isfinite(value)) {
            throw std::domain_error("torsion is not finite at s = " + std::to_string(s));
        }
        const int sign = sign_of(value);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) {
            if (report.count == 0) {
                report.location = last_s + (s - last_s) * last_value / (last_value - value);
                report.direction = sign > 0 ? Crossing::MinusToPlus : Crossing::PlusToMinus;
            }
            ++report.count;
        }
        last_sign = sign;
        last_s = s;
        last_value = value;
    }
    return report;
}

Crossing expected_torsion_crossing(const Exponent& p) {
    if (p.is_boundary()) return Crossing::None;
    return p.regime() == Regime::ConcaveF ? Crossing::MinusToPlus : Crossing::PlusToMinus;
}

std::vector<SignTableRow> sign_table(const Exponent& p, int points) {
    if (points < 2) throw std::invalid_argument("sign_table: need at least 2 points");
    if (p.is_boundary()) throw std::invalid_argument("sign_table: p must not be 1 or 2");
    const bool concave_f = p.regime() == Regime::ConcaveF;
    std::vector<SignTableRow> rows;
    auto check = [&](std::string name, int expected, auto&& fn) {
        SignTableRow row{std::move(name), p.value(), expected, points, 0, 0.0};
        for (int k = 1; k <= points; ++k) {
            const double u = static_cast<double>(k) / points;
            const double value = fn(u);
            if (sign_of(value) == -expected) {
                ++row.violations;
                if (std::abs(value) > std::abs(row.worst)) row.worst = value;
            }
        }
        rows.push_back(std::move(row));
    };
    // u concave (v <= 0) exactly in the F-concave regime.
    check("v", concave_f ? -1 : 1, [&](double x) { return v_fn(x, p); });
    if (p.positive()) {
        check("g", concave_f ? 1 : -1, [&](double x) { return g_fn(x, p); });
        check("h''", concave_f ? 1 : -1, [&](double t) { return h_d2(t, p); });
    } else {
        check("h~''", -1, [&](double t) { return h_tilde_d2(t, p); });
    }
    return rows;
}

}  // namespace lpenv::analysis
