#pragma once

// Remainder integrals int_0^{1/n} prod_k a_k x / (1 + a_k x) dx over a set
// of distinct positive integer nodes, in closed form via partial fractions,
// and their series over n with an Euler-Maclaurin tail.

#include <initializer_list>
#include <vector>

#include "bintrans/bignum.hpp"
#include "bintrans/quadrature.hpp"

namespace bintrans {

/// Pairwise distinct positive integers a_1..a_m, m >= 1.
class NodeSet {
public:
    /// Throws std::invalid_argument on an empty list, a node < 1, or a
    /// repeated node.
    explicit NodeSet(std::vector<unsigned long> nodes);
    NodeSet(std::initializer_list<unsigned long> nodes) : NodeSet(std::vector<unsigned long>(nodes)) {}

    /// {1, 2, ..., m}.
    static NodeSet first(Order m);

    std::size_t size() const { return nodes_.size(); }
    unsigned long operator[](std::size_t i) const { return nodes_[i]; }
    const std::vector<unsigned long>& values() const { return nodes_; }
    unsigned long max() const;
    ExactInt product() const;

private:
    std::vector<unsigned long> nodes_;
};

/// f(a_k) = prod_{n != k} a_n / (a_n - a_k).
struct LagrangeWeights {
    NodeSet nodes;
    std::vector<ExactRational> weights;
};

LagrangeWeights lagrange_weights(const NodeSet& nodes);

/// prod_k a_k x/(1 + a_k x) = constant + sum_k c_k / (1 + a_k x).
/// The c_k are residues at x = -1/a_k, computed directly (not through the
/// Lagrange weights, which they equal up to sign).
struct RemainderIntegrand {
    NodeSet nodes;
    std::vector<ExactRational> coefficients;
    ExactRational constant;
};

RemainderIntegrand partial_fractions(const NodeSet& nodes);

/// The integrand as a product.
BigReal integrand_direct(const NodeSet& nodes, const BigReal& x);
/// The integrand rebuilt from its partial fractions.
BigReal integrand_reconstructed(const RemainderIntegrand& integrand, const BigReal& x);

/// Working precision used for remainder integrals over `nodes`.
Bits remainder_bits(const NodeSet& nodes, const PrecisionPolicy& policy);

/// Closed form 1/n + sum_k (c_k/a_k) ln(1 + a_k/n), at remainder_bits.
BigReal remainder_integral(const NodeSet& nodes, Order n, const PrecisionPolicy& policy);
BigReal remainder_integral(const RemainderIntegrand& integrand, Order n, Bits bits);

/// Same integral by adaptive quadrature of the direct product, with
/// tolerance 2^-(remainder_bits - 8). Test oracle for the closed form.
QuadratureResult remainder_integral_quadrature(const NodeSet& nodes, Order n, const PrecisionPolicy& policy);

/// Truncated series sum_{n=1}^N of the remainder integrals plus an estimate
/// of the rest.
struct RemainderSeries {
    Order truncation = 0;
    BigReal partial;
    /// sum_{n>N}: direct terms up to the Euler-Maclaurin start point, then the
    /// Euler-Maclaurin tail.
    BigReal tail_estimate;
    /// Rigorous bound on |true tail - tail_estimate|.
    BigReal tail_error_bound;
    /// Term-domination bound on the untouched tail sum_{n>N}:
    /// prod(a) / ((m+1) m N^m). Infinite when N = 0.
    BigReal truncation_bound;

    BigReal total() const { return partial + tail_estimate; }
};

/// Direct sum for n = 1..truncation, tail estimated to within tail_target
/// (or 2^-remainder_bits, whichever is larger).
RemainderSeries remainder_series(const NodeSet& nodes, Order truncation, const PrecisionPolicy& policy,
                                 const BigReal& tail_target);

} // namespace bintrans
