#pragma once

// Partial sums and partial products of the binomial-transform series for
// 1, u, ln u and Euler's constant.

#include <optional>
#include <string>
#include <vector>

#include "bintrans/bignum.hpp"
#include "bintrans/factored.hpp"
#include "bintrans/remainder.hpp"

namespace bintrans {

/// One evaluation of a series or product at a given order.
struct PartialResult {
    Order order = 0;
    BigReal value;
    std::optional<ExactRational> exact_value;
    /// When present, exact_value + exact_residual is the exact target.
    std::optional<ExactRational> exact_residual;
    /// When present, |reference_error| <= proven_bound.
    std::optional<BigReal> proven_bound;
    /// reference - value.
    std::optional<BigReal> reference_error;
};

/// sum_{k=1}^m C(m,k)(-1)^(k+1)/(ku+1) -> 1. For rational u the sum is exact
/// and the residual 1 - value = g_m(1/u) is attached; the proven bound is
/// u / H_m from the uniform estimate on g_m. Throws std::domain_error for
/// u <= 0 and std::invalid_argument for m = 0.
PartialResult thm1_partial(const ExactRational& u, Order m, const PrecisionPolicy& policy);
PartialResult thm1_partial(const BigReal& u, Order m, const PrecisionPolicy& policy);

/// sum_{k=1}^m C(m,k)(-1)^(k+1)/k ln(ku+1) -> u.
PartialResult remark2_single(const BigReal& u, Order m, const PrecisionPolicy& policy);

/// sum_{n=1}^M sum_{k=1}^n C(n,k)(-1)^(k+1)/n ln(ku+1) -> u. No tail bound.
PartialResult remark2_double(const BigReal& u, Order outer, const PrecisionPolicy& policy);

/// Exact partial products plus, for the double product, the per-m factors.
struct ProductResult {
    PartialResult result;
    FactoredRational exact;
    std::vector<FactoredRational> factors;
};

/// prod_{k=1}^m (k+u)^(C(m,k)(-1)^(k+1)) -> u, kept exact.
ProductResult cor3_product_single(const ExactRational& u, Order m, const PrecisionPolicy& policy);

/// prod_{n=0}^M prod_{k=0}^n (k+u+1)^(C(n,k)(-1)^k) -> u, kept exact.
ProductResult cor3_product_double(const ExactRational& u, Order outer, const PrecisionPolicy& policy);

/// sum_{k=1}^m C(m,k)(-1)^k/k ln(k!) -> gamma. From m = 2 on, the error
/// gamma - value lies in (0, 2 gamma/(m+1)), attached as proven_bound.
PartialResult thm4_partial(Order m, const PrecisionPolicy& policy);

/// S_m = sum_j int_0^{1/j} g_m(1/u) du, truncated at J (the integrand is the
/// remainder integrand over nodes 1..m). The tail is estimated to within
/// 2^-target_bits.
RemainderSeries gamma_remainder_series(Order m, Order truncation, const PrecisionPolicy& policy);

/// sum_{j=1}^J sum_{i=1}^j C(j-1,i-1)(-1)^i/j ln i -> gamma.
PartialResult cor5_partial(Order outer, const PrecisionPolicy& policy);

/// Rows in strictly increasing order against a single reference value.
class ConvergenceTable {
public:
    ConvergenceTable(std::string formula, std::optional<std::string> parameter, BigReal reference);

    /// Throws std::invalid_argument unless row.order exceeds the last order.
    void append(PartialResult row);

    const std::string& formula() const { return formula_; }
    const std::optional<std::string>& parameter() const { return parameter_; }
    const BigReal& reference() const { return reference_; }
    const std::vector<PartialResult>& rows() const { return rows_; }

private:
    std::string formula_;
    std::optional<std::string> parameter_;
    BigReal reference_;
    std::vector<PartialResult> rows_;
};

} // namespace bintrans
