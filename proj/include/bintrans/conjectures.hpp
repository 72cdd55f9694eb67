#pragma once

// Evaluators for the conjectured binomial-transform limits. None of these
// assert the conjectured value: they report residuals, and the evidence
// helpers turn residual trails into a status.

#include <string>
#include <utility>
#include <vector>

#include "bintrans/bignum.hpp"
#include "bintrans/constants.hpp"
#include "bintrans/remainder.hpp"

namespace bintrans {

/// Positive reals z_1..z_n for the nested logarithm
/// ln(1 + z_1 ln(1 + z_2 ... ln(1 + z_n k)...)).
class NestedLogArgs {
public:
    /// Throws std::invalid_argument when empty or any z_i <= 0.
    explicit NestedLogArgs(std::vector<BigReal> z);

    std::size_t size() const { return z_.size(); }
    const std::vector<BigReal>& values() const { return z_; }
    BigReal product(Bits bits) const;

private:
    std::vector<BigReal> z_;
};

/// sum_{k=1}^m C(m,k)(-1)^(k+1)/k ln(1 + z_1 ln(1 + ... ln(1 + z_n k))).
/// reference_error is z_1 z_2 ... z_n - value.
PartialResult conj1_partial(const NestedLogArgs& args, Order m, const PrecisionPolicy& policy);

/// sum_{n=1}^m C(m,n)(-1)^(n+1)/(z(n+1)+1); reference_error against
/// conj2_reference(z). Throws std::domain_error for z < 0.
PartialResult conj2_partial(const BigReal& z, Order m, const PrecisionPolicy& policy);

/// sum_{n>=0} (-1)^n z^n / (n!)^2, summed until the terms fall below
/// 2^-bits; the alternating tail bound covers the rest.
BigReal conj2_reference(const BigReal& z, Bits bits);

/// sum_{k=1}^m C(m,k)(-1)^k / (k W_m) ln(k!!/(k-1)!!), with
/// W_m = sum_{n=1}^m 2^(n-1)/n dividing every term. reference_error against
/// ln(pi/2).
PartialResult conj3_partial(Order m, const PrecisionPolicy& policy);

/// sum_k f(a_k) ln(a_k!)/a_k with the Lagrange weights of the nodes.
BigReal conj4_finite_part(const NodeSet& nodes, Bits bits);

struct Conj4Report {
    BigReal finite_part;
    RemainderSeries series;
    /// finite_part + series.total() - gamma.
    BigReal residual;
};

/// Full evaluation: the remainder series is summed with its tail estimated
/// to within tail_target.
Conj4Report conj4_residual(const NodeSet& nodes, const PrecisionPolicy& policy, const BigReal& tail_target);

/// Same right-hand side truncated after N remainder integrals with no tail;
/// order = N, reference_error = gamma - value.
PartialResult conj4_truncated(const NodeSet& nodes, Order truncation, const PrecisionPolicy& policy);

/// y_k = sum_n int_0^{1/n} dx/(1 + (kx)^-1), the remainder series for the
/// single node k. Throws std::invalid_argument for k = 0.
RemainderSeries y_k(Order k, const PrecisionPolicy& policy, const BigReal& tail_target);

enum class ConjectureStatus { Supported, Inconclusive, RefutedAtTolerance };

std::string to_string(ConjectureStatus status);

/// Residuals at increasing orders.
using ResidualTrail = std::vector<std::pair<Order, BigReal>>;

/// Aitken delta-squared estimate of the residual limit from the last three
/// entries (the last residual when fewer). Meaningful for orders spaced
/// geometrically.
double aitken_limit(const ResidualTrail& trail);

/// Supported: magnitudes strictly decrease and either the last residual or
/// the extrapolated limit is within `tolerance`. Refuted-at-tolerance: the
/// last residual exceeds `tolerance` and either stopped shrinking or
/// extrapolates to a limit outside `tolerance`. Inconclusive otherwise.
ConjectureStatus classify(const ResidualTrail& trail, double tolerance);

} // namespace bintrans
