#pragma once

#include <span>
#include <string_view>

namespace lpenv {

/// Which candidate envelope is the concave one for a given exponent.
///   ConcaveF: p in (0, 1] u [2, inf)   upper = F_p, lower = G_p
///   ConcaveG: p in (-inf, 0) u (1, 2)  upper = G_p, lower = F_p
enum class Regime { ConcaveF, ConcaveG };

std::string_view to_string(Regime regime);

inline constexpr double kDefaultMinAbsExponent = 1e-3;

/// A validated nonzero exponent p with its envelope regime.
class Exponent {
public:
    /// Throws std::invalid_argument for non-finite p or |p| < min_abs.
    static Exponent classify(double p, double min_abs = kDefaultMinAbsExponent);

    [[nodiscard]] double value() const { return p_; }
    [[nodiscard]] Regime regime() const { return regime_; }
    [[nodiscard]] bool positive() const { return p_ > 0.0; }
    [[nodiscard]] bool is_one() const { return p_ == 1.0; }
    [[nodiscard]] bool is_two() const { return p_ == 2.0; }
    /// p in {1, 2}: both envelopes coincide.
    [[nodiscard]] bool is_boundary() const { return is_one() || is_two(); }

private:
    Exponent(double p, Regime regime) : p_(p), regime_(regime) {}
    double p_;
    Regime regime_;
};

inline constexpr double kCauchySchwarzSlack = 1e-9;

/// A point (x, y, z) of the cone {x, y >= 0, 0 <= z <= sqrt(xy)}.
///
/// Holds (||f||_p^p, ||g||_p^p, ||fg||_{p/2}^{p/2}). A z that overshoots
/// sqrt(xy) by at most slack * (x + y) / 2 is clamped onto the boundary;
/// anything further out is rejected.
class ConeTriple {
public:
    static ConeTriple make(double x, double y, double z, double slack = kCauchySchwarzSlack);

    [[nodiscard]] double x() const { return x_; }
    [[nodiscard]] double y() const { return y_; }
    [[nodiscard]] double z() const { return z_; }
    [[nodiscard]] bool on_upper_boundary() const;
    [[nodiscard]] ConeTriple swapped() const { return ConeTriple(y_, x_, z_); }

    friend bool operator==(const ConeTriple&, const ConeTriple&) = default;

private:
    ConeTriple(double x, double y, double z) : x_(x), y_(y), z_(z) {}
    double x_;
    double y_;
    double z_;
};

struct DerivedRatios {
    double gamma;  // 2z / (x + y); 0 at the origin
    double v;      // min{x/z, y/z, 1}; 1 when z = 0
    double w;      // same value as gamma
    double c_p;    // min{x, y, z} / z; 1 when z = 0
};

DerivedRatios derived_ratios(const ConeTriple& t);

/// Boundary data phi_p on the top of the cone: (x^{1/p} + y^{1/p})^p.
double boundary_value(const Exponent& p, double x, double y);

/// F_p: the envelope that is constant on horizontal chords of a cross-section.
double eval_F(const Exponent& p, const ConeTriple& t);

/// G_p: linear on {z <= min(x, y)}, ruled by segments through the corners
/// of a cross-section elsewhere.
double eval_G(const Exponent& p, const ConeTriple& t);

/// Concave envelope of the boundary data.
double upper_envelope(const Exponent& p, const ConeTriple& t);
/// Convex envelope of the boundary data.
double lower_envelope(const Exponent& p, const ConeTriple& t);

/// (1 + Gamma^{2/p})^{p-1} (x + y), the earlier single-parameter bound.
/// It is an upper bound for p in (0, 1] u [2, inf), lower bound otherwise.
double carlen_bound(const Exponent& p, const ConeTriple& t);

/// Multipliers of (x + y) on the slice x + y = 2 parametrised by Gamma:
/// F_p / (x + y) and carlen_bound / (x + y).
double refined_factor(const Exponent& p, double gamma);
double carlen_factor(const Exponent& p, double gamma);

/// True when the refined factor must not exceed the Carlen factor,
/// i.e. p in (0, 1] u [2, inf). On [1, 2] and p < 0 the order reverses.
bool refinement_is_upper(const Exponent& p);

/// Whether carlen_bound bounds ||f+g||_p^p from above for this exponent.
bool carlen_is_upper(const Exponent& p);

struct InequalitySides {
    double lhs;
    double rhs;
};

/// ((1+x)^q + (1-x)^q)/2  versus  ((1 + (1-x^2)^q)/2)^{1-q}.
/// lhs <= rhs for q in (-inf, 1/2] u [1, inf); reversed for q in [1/2, 1).
InequalitySides two_point(double q, double x);

/// (a+b)^p  versus  a^p + b^p + (2^p - 2)(ab)^{p/2}.
/// lhs <= rhs for p in [1, 2]; reversed for p in (0, 1] u [2, inf).
InequalitySides scalar_three_term(double a, double b, const Exponent& p);

/// sum_j ||f_j||_p^p + (2^p - 2) sum_{i<j} ||f_i f_j||_{p/2}^{p/2}.
/// Throws std::domain_error for p < 0, where the bound fails for three or
/// more functions.
double sum_bound(double moments, double overlaps, const Exponent& p);

/// Pointwise (sum a_j)^p versus sum a_j^p + (2^p - 2) sum_{i<j} (a_i a_j)^{p/2}.
/// Accepts any p; used to exhibit the failure for p < 0.
InequalitySides pointwise_sum_terms(std::span<const double> a, const Exponent& p);

}  // namespace lpenv
