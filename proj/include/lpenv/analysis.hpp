#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lpenv/envelopes.hpp"

namespace lpenv::analysis {

inline constexpr double kZeroThreshold = 1e-12;

/// -1, 0 or +1, with |value| < threshold counted as zero.
int sign_of(double value, double threshold = kZeroThreshold);

// Sign of u'' for u(t) = F_p(1 + s, 1 - s, t), as a function of x = tan^2.
// v(1) = 0; v <= 0 for p in (0,1) u (2,inf), v >= 0 for p in (-inf,0) u (1,2).
double v_fn(double x, const Exponent& p);

// g_p(x) = 1 + (2/p - 1) x - (1 + x)^{2-p}; sign(h'') = sign(g_p(t^{2/p})).
double g_fn(double x, const Exponent& p);

// h(t) = (t^{1/p} + t^{-1/p})^p - (t + 1/t), the G_p profile for p > 0.
double h_fn(double t, const Exponent& p);
double h_d1(double t, const Exponent& p);
/// 2 t^{-3} [(1 + t^{2/p})^{p-2} (1 + (2/p - 1) t^{2/p}) - 1]
double h_d2(double t, const Exponent& p);

// h~(t) = (t^{1/p} + t^{-1/p})^p, the G_p profile for p < 0.
double h_tilde_fn(double t, const Exponent& p);
double h_tilde_d1(double t, const Exponent& p);
/// 2 t^{-2} (t^{1/p} + t^{-1/p})^{p-2} [t^{-2/p} + (2/p - 1)]
double h_tilde_d2(double t, const Exponent& p);

/// Fourth-order central differences.
double central_d1(const std::function<double(double)>& f, double x, double h);
double central_d2(const std::function<double(double)>& f, double x, double h);
double central_d3(const std::function<double(double)>& f, double x, double h);

/// gamma(s) = (s, sqrt(1 - s^2), ((1-s)^{1/p} + (1+s)^{1/p})^p) on (-1, 1).
struct CurvePoint {
    double x;
    double y;
    double z;
};
CurvePoint boundary_curve(double s, const Exponent& p);

/// Frenet torsion (g' x g'') . g''' / |g' x g''|^2 with derivatives by
/// central differences: step 1e-5 for the first two, 1e-3 for the third,
/// each shrunk to keep the stencil inside (-1, 1). Returns NaN when a
/// derivative is not finite.
double torsion(double s, const Exponent& p);

/// Same formula with closed-form derivatives; reference for `torsion`.
double torsion_exact(double s, const Exponent& p);

enum class Crossing { MinusToPlus, PlusToMinus, None };
std::string_view to_string(Crossing crossing);

struct SignChangeReport {
    int count;
    double location;  // interpolated root of the first change; NaN if none
    Crossing direction;
};

/// Sign changes of the torsion on `grid` uniform points of
/// [-1 + 1e-3, 1 - 1e-3]. Throws std::domain_error if the torsion is not
/// finite at a grid point, std::invalid_argument for grid < 64 or p in {1, 2}.
SignChangeReport torsion_sign_changes(const Exponent& p, int grid);

/// Crossing direction claimed for the regime: minus-to-plus when
/// p in (0,1) u (2,inf), plus-to-minus when p in (-inf,0) u (1,2).
Crossing expected_torsion_crossing(const Exponent& p);

/// One row of the sign table: the function, the sign the case analysis
/// requires (+1 for >= 0, -1 for <= 0) and the observed violations.
struct SignTableRow {
    std::string function;
    double p;
    int expected_sign;
    int samples;
    int violations;
    double worst;  // most violating value, 0 if none
};

/// v_fn, g_fn, h'' and h~'' checked on `points`-point grids in (0, 1] for
/// one exponent (functions that do not apply to p are omitted).
std::vector<SignTableRow> sign_table(const Exponent& p, int points);

}  // namespace lpenv::analysis
