#include "lpenv/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "lpenv/extremal.hpp"
#include "lpenv/power.hpp"
#include "lpenv/sampling.hpp"
#include "lpenv/step_function.hpp"

namespace lpenv {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double s;
    double z;
};

Vec2 operator-(Vec2 a, Vec2 b) { return {a.s - b.s, a.z - b.z}; }
double cross(Vec2 a, Vec2 b) { return a.s * b.z - a.z * b.s; }
Vec2 position(const BoundaryNode& n) { return {n.s, n.z}; }

class Best {
public:
    explicit Best(EnvelopeKind kind) : kind_(kind) {}
    void offer(double value) {
        if (!found_ || (kind_ == EnvelopeKind::Concave ? value > best_ : value < best_)) {
            best_ = value;
            found_ = true;
        }
    }
    [[nodiscard]] bool found() const { return found_; }
    [[nodiscard]] double value() const { return best_; }

private:
    EnvelopeKind kind_;
    bool found_ = false;
    double best_ = 0.0;
};

// Barycentric weights of q in triangle (a, b, c); nullopt if degenerate.
std::optional<std::array<double, 3>> barycentric(Vec2 a, Vec2 b, Vec2 c, Vec2 q) {
    const double area = cross(b - a, c - a);
    if (std::abs(area) < 1e-12) return std::nullopt;
    const double wa = cross(b - q, c - q) / area;
    const double wb = cross(c - q, a - q) / area;
    return std::array<double, 3>{wa, wb, 1.0 - wa - wb};
}

bool strictly_inside(const std::vector<BoundaryNode>& nodes, Vec2 q) {
    const std::size_t m = nodes.size();
    for (std::size_t j = 0; j < m; ++j) {
        const Vec2 a = position(nodes[j]);
        const Vec2 b = position(nodes[(j + 1) % m]);
        if (cross(b - a, q - a) <= 0.0) return false;
    }
    return true;
}

// q lies in D but outside the inscribed polygon, i.e. in the thin cap between
// two consecutive arc nodes and the arc. The radial projection P of q onto the
// arc is a genuine boundary point and q lies in triangle (node_k, node_k+1, P).
double cap_value(const BoundaryCurve& curve, Vec2 q) {
    const auto& nodes = curve.nodes();
    const int arc = curve.resolution();
    const double step = std::numbers::pi / (arc - 1);
    const double angle = std::atan2(q.z, q.s);
    const int k = std::clamp(static_cast<int>(angle / step), 0, arc - 2);
    const double radius = std::hypot(q.s, q.z);
    const Vec2 p{q.s / radius, q.z / radius};
    const auto w = barycentric(position(nodes[k]), position(nodes[k + 1]), p, q);
    const double p_value = curve.arc_value(p.s);
    if (!w) return p_value;
    return (*w)[0] * nodes[k].value + (*w)[1] * nodes[k + 1].value + (*w)[2] * p_value;
}

double restricted_search(const std::vector<BoundaryNode>& nodes, Vec2 q, EnvelopeKind kind) {
    const std::size_t m = nodes.size();
    // Angles of the vertices seen from q increase monotonically around the
    // polygon; unwrap them so the exit edge can be found by bisection.
    std::vector<double> angle(m + 1);
    double previous = std::atan2(nodes[0].z - q.z, nodes[0].s - q.s);
    angle[0] = previous;
    for (std::size_t j = 1; j < m; ++j) {
        const double a = std::atan2(nodes[j].z - q.z, nodes[j].s - q.s);
        double delta = std::fmod(a - previous, kTwoPi);
        if (delta < 0.0) delta += kTwoPi;
        angle[j] = angle[j - 1] + delta;
        previous = a;
    }
    angle[m] = angle[0] + kTwoPi;

    Best best(kind);
    for (std::size_t i = 0; i < m; ++i) {
        double target = angle[i] + std::numbers::pi;
        if (target >= angle[m]) target -= kTwoPi;
        const auto it = std::upper_bound(angle.begin(), angle.end(), target);
        if (it == angle.begin()) continue;
        const auto j = static_cast<std::size_t>(std::distance(angle.begin(), it) - 1) % m;
        const std::size_t jn = (j + 1) % m;
        if (j == i || jn == i) continue;

        const Vec2 vi = position(nodes[i]);
        const Vec2 vj = position(nodes[j]);
        const Vec2 d = q - vi;
        const Vec2 e = position(nodes[jn]) - vj;
        const double denom = cross(d, e);
        if (std::abs(denom) < 1e-300) continue;
        const double t = cross(vj - vi, e) / denom;
        const double lambda = std::clamp(cross(vj - vi, d) / denom, 0.0, 1.0);
        if (!(t >= 1.0)) continue;
        const double mu = 1.0 / t;
        const double exit_value = (1.0 - lambda) * nodes[j].value + lambda * nodes[jn].value;
        best.offer((1.0 - mu) * nodes[i].value + mu * exit_value);
    }
    if (!best.found()) throw std::logic_error("oracle: no supporting segment found");
    return best.value();
}

double exhaustive_search(const std::vector<BoundaryNode>& nodes, Vec2 q, EnvelopeKind kind) {
    constexpr double kTol = 1e-14;
    Best best(kind);
    const std::size_t m = nodes.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            for (std::size_t c = b + 1; c < m; ++c) {
                const auto w = barycentric(position(nodes[a]), position(nodes[b]), position(nodes[c]), q);
                if (!w || (*w)[0] < -kTol || (*w)[1] < -kTol || (*w)[2] < -kTol) continue;
                best.offer((*w)[0] * nodes[a].value + (*w)[1] * nodes[b].value + (*w)[2] * nodes[c].value);
            }
        }
    }
    if (!best.found()) throw std::logic_error("oracle: no containing triangle found");
    return best.value();
}

}  // namespace

BoundaryCurve BoundaryCurve::build(const Exponent& p, int arc_nodes) {
    if (arc_nodes < 16) throw std::invalid_argument("boundary curve needs at least 16 arc nodes");
    std::vector<BoundaryNode> nodes(static_cast<std::size_t>(arc_nodes));
    const double step = std::numbers::pi / (arc_nodes - 1);
    // Mirror the arc exactly so that horizontal chords join nodes at equal height.
    for (int k = 0; k <= (arc_nodes - 1) / 2; ++k) {
        const int mirror = arc_nodes - 1 - k;
        const double s = k == 0 ? 1.0 : std::cos(k * step);
        const double z = k == 0 ? 0.0 : std::sin(k * step);
        nodes[k] = {s, z, 0.0};
        nodes[mirror] = {k == mirror ? 0.0 : -s, z, 0.0};
    }
    if (arc_nodes % 2 == 1) nodes[(arc_nodes - 1) / 2] = {0.0, 1.0, 0.0};
    BoundaryCurve curve(p, arc_nodes, {});
    for (auto& n : nodes) n.value = curve.arc_value(n.s);

    const int diameter = arc_nodes / 4;
    for (int k = 1; k <= diameter; ++k) {
        const double s = -1.0 + 2.0 * k / (diameter + 1);
        nodes.push_back({s, 0.0, curve.diameter_value()});
    }
    curve.nodes_ = std::move(nodes);
    return curve;
}

double BoundaryCurve::arc_value(double s) const {
    const double c = std::clamp(s, -1.0, 1.0);
    return power_sum(1.0 + c, 1.0 - c, p_.value());
}

double oracle_envelope(const BoundaryCurve& curve, double s, double z, EnvelopeKind kind,
                       SearchMode mode) {
    const double r2 = s * s + z * z;
    if (!std::isfinite(s) || !std::isfinite(z) || z < 0.0 || r2 > 1.0 + 1e-12) {
        throw std::domain_error("oracle query lies outside the half-disc");
    }
    if (z == 0.0) return std::abs(s) == 1.0 ? curve.arc_value(s) : curve.diameter_value();
    if (r2 >= 1.0 - 1e-14) return curve.arc_value(s);

    const Vec2 q{s, z};
    if (!strictly_inside(curve.nodes(), q)) return cap_value(curve, q);
    return mode == SearchMode::Restricted ? restricted_search(curve.nodes(), q, kind)
                                          : exhaustive_search(curve.nodes(), q, kind);
}

double closed_form_on_section(const Exponent& p, double s, double z, EnvelopeKind kind) {
    const auto t = ConeTriple::make(1.0 + s, 1.0 - s, z);
    return kind == EnvelopeKind::Concave ? upper_envelope(p, t) : lower_envelope(p, t);
}

namespace {

using Segment = StepFunction::Segment;

std::vector<Segment> segments_of(const StepFunction& f) {
    std::vector<Segment> out;
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back({f.length(i), f.values()[i]});
    return out;
}

// f1 squeezed onto [0, 1/2] followed by f2 squeezed onto [1/2, 1]; moments average.
StepFunction concatenate(const StepFunction& f1, const StepFunction& f2) {
    std::vector<Segment> segs;
    for (auto seg : segments_of(f1)) segs.push_back({0.5 * seg.length, seg.value});
    for (auto seg : segments_of(f2)) segs.push_back({0.5 * seg.length, seg.value});
    return StepFunction::from_segments(segs);
}

std::optional<FunctionPair> family_pair(const Exponent& p, const ConeTriple& t, bool swap_family) {
    try {
        return swap_family ? extremal_F(p, t) : extremal_G(p, t);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

std::optional<ConeTriple> try_triple(double x, double y, double z) {
    if (!(x >= 0.0 && y >= 0.0 && z >= 0.0) || z > std::sqrt(x * y)) return std::nullopt;
    return ConeTriple::make(x, y, z);
}

}  // namespace

double empirical_B(const Exponent& p, const ConeTriple& t, Extremum direction, int budget,
                   std::uint64_t seed) {
    const double q = p.value();
    Best best(direction == Extremum::Sup ? EnvelopeKind::Concave : EnvelopeKind::Convex);
    auto measure = [&](const FunctionPair& pair) {
        const double value = sum_power_norm(pair.f, pair.g, q);
        if (std::isfinite(value)) best.offer(value);
    };
    for (bool swap_family : {true, false}) {
        if (auto pair = family_pair(p, t, swap_family)) measure(*pair);
    }

    Rng rng = make_rng(seed, 0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    const double scale = 0.5 * (t.x() + t.y());
    for (int k = 0; k < budget; ++k) {
        const double radius = 0.5 * scale * std::abs(unit(rng));
        const double dx = radius * unit(rng);
        const double dy = radius * unit(rng);
        const double dz = radius * unit(rng);
        const auto t1 = try_triple(t.x() + dx, t.y() + dy, t.z() + dz);
        const auto t2 = try_triple(t.x() - dx, t.y() - dy, t.z() - dz);
        if (!t1 || !t2) continue;
        const auto pair1 = family_pair(p, *t1, coin(rng));
        const auto pair2 = family_pair(p, *t2, coin(rng));
        if (!pair1 || !pair2) continue;
        measure({concatenate(pair1->f, pair2->f), concatenate(pair1->g, pair2->g)});
    }
    if (!best.found()) throw std::domain_error("empirical_B: no admissible pair for this triple");
    return best.value();
}

}  // namespace lpenv
