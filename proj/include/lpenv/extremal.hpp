#pragma once

#include "lpenv/envelopes.hpp"
#include "lpenv/step_function.hpp"

namespace lpenv {

struct FunctionPair {
    StepFunction f;
    StepFunction g;
};

/// Swap pair (a, b) on [0, c], (b, a) on [c, 1] with
///   a^p, b^p = ((x+y) +- sqrt((x+y)^2 - 4z^2)) / 2,
///   c = 1/2 + (x - y) / (2 (a^p - b^p)).
/// Its triple is t and ||f+g||_p^p = F_p(t).
FunctionPair extremal_F(const Exponent& p, const ConeTriple& t);

/// Pair attaining G_p(t) for p > 0.
///   z <= min(x, y): (a, a) on [0, 1/2], (b, 0) on [1/2, 3/4], (0, c) on [3/4, 1]
///                   with a^p = 2z, b^p = 4(x - z), c^p = 4(y - z).
///   z >  min(x, y): (a, b) on [0, 1/2], (c, 0) on [1/2, 1] (for y the minimum)
///                   with b^p = 2y, a^p = 2z^2/y, c^p = 2x - 2z^2/y.
/// The x < y case is the mirror image.
FunctionPair extremal_G_pos(const Exponent& p, const ConeTriple& t);

/// Same moment matching for p < 0 with 0 replaced by +inf. Throws
/// std::domain_error when z = 0 (G_p = 0 there is not attained).
FunctionPair extremal_G_neg(const Exponent& p, const ConeTriple& t);

/// extremal_G_pos or extremal_G_neg by the sign of p.
FunctionPair extremal_G(const Exponent& p, const ConeTriple& t);

/// Pair attaining the upper (lower) envelope: extremal_F or extremal_G by regime.
FunctionPair extremal_upper(const Exponent& p, const ConeTriple& t);
FunctionPair extremal_lower(const Exponent& p, const ConeTriple& t);

}  // namespace lpenv
