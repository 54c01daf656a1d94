#pragma once

#include <cstdint>
#include <vector>

#include "lpenv/envelopes.hpp"

namespace lpenv {

enum class EnvelopeKind { Concave, Convex };

/// Node of the cross-section boundary, in coordinates x = 1 + s, y = 1 - s.
struct BoundaryNode {
    double s;
    double z;
    double value;
};

/// Discretised boundary of the half-disc D = {s^2 + z^2 <= 1, z >= 0} with
/// the boundary data attached.
///
/// Vertices are stored counter-clockwise: `arc_nodes` points on the upper
/// semicircle, uniform in angle from (1, 0) to (-1, 0), followed by
/// arc_nodes / 4 interior points of the diameter from left to right. Arc
/// nodes carry ((1+s)^{1/p} + (1-s)^{1/p})^p, diameter nodes carry 2 (p > 0)
/// or 0 (p < 0).
class BoundaryCurve {
public:
    /// Throws std::invalid_argument for arc_nodes < 16.
    static BoundaryCurve build(const Exponent& p, int arc_nodes);

    [[nodiscard]] const Exponent& exponent() const { return p_; }
    [[nodiscard]] int resolution() const { return arc_nodes_; }
    [[nodiscard]] const std::vector<BoundaryNode>& nodes() const { return nodes_; }

    /// Boundary data at a point of the semicircle or the diameter.
    [[nodiscard]] double arc_value(double s) const;
    [[nodiscard]] double diameter_value() const { return p_.positive() ? 2.0 : 0.0; }

private:
    BoundaryCurve(Exponent p, int arc_nodes, std::vector<BoundaryNode> nodes)
        : p_(p), arc_nodes_(arc_nodes), nodes_(std::move(nodes)) {}
    Exponent p_;
    int arc_nodes_;
    std::vector<BoundaryNode> nodes_;
};

enum class SearchMode {
    /// For every node, the segment from it through the query is extended to
    /// the opposite polygon edge; O(M log M) per query.
    Restricted,
    /// Every node triangle containing the query; O(M^3), for small curves.
    Exhaustive,
};

/// Best convex combination of boundary data hitting (s, z): the maximum for
/// the concave envelope, the minimum for the convex one. Inner
/// approximation of the true envelope; converges as the resolution grows.
/// Throws std::domain_error if (s, z) is outside D.
double oracle_envelope(const BoundaryCurve& curve, double s, double z, EnvelopeKind kind,
                       SearchMode mode = SearchMode::Restricted);

/// Closed-form envelope at (1 + s, 1 - s, z).
double closed_form_on_section(const Exponent& p, double s, double z, EnvelopeKind kind);

enum class Extremum { Sup, Inf };

/// Best ||f+g||_p^p found over step-function pairs whose triple equals t:
/// the swap family, the triangle-cone / two-block families, and `budget`
/// seeded concatenations of such pairs for random splits t = (t1 + t2) / 2.
double empirical_B(const Exponent& p, const ConeTriple& t, Extremum direction, int budget,
                   std::uint64_t seed);

}  // namespace lpenv
