#pragma once

#include <functional>
#include <vector>

#include "bintrans/bignum.hpp"

namespace bintrans {

/// Gauss-Legendre nodes and weights on [-1, 1]. Only the non-negative half
/// is stored; the rule is symmetric.
struct GaussLegendreRule {
    int order = 0;
    std::vector<BigReal> nodes;
    std::vector<BigReal> weights;
};

/// Cached per (order, bits). Nodes come from Newton iteration on P_order.
const GaussLegendreRule& gauss_legendre(int order, Bits bits);

struct QuadratureResult {
    BigReal value;
    /// Sum over accepted panels of |G_low - G_high|.
    BigReal error_estimate;
    int panels = 0;
};

using RealFunction = std::function<BigReal(const BigReal&)>;

/// Adaptive bisection with a pair of Gauss-Legendre rules (40 and 60 points)
/// per panel; a panel is accepted when the two rules agree to its share of
/// `tolerance`. Throws std::runtime_error past 48 levels of bisection.
QuadratureResult integrate_adaptive(const RealFunction& f, const BigReal& a, const BigReal& b, Bits bits,
                                    const BigReal& tolerance);

} // namespace bintrans
