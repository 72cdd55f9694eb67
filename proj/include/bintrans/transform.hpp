#pragma once

// Alternating binomial transform engine plus exact checks of the
// combinatorial identities the series rest on.

#include <variant>
#include <vector>

#include "bintrans/bignum.hpp"

namespace bintrans {

/// Yields C(m,0), C(m,1), ..., C(m,m) using C(m,k+1) = C(m,k)(m-k)/(k+1).
class BinomialRow {
public:
    explicit BinomialRow(Order m) : m_(m) {}

    Order k() const { return k_; }
    const ExactInt& value() const { return value_; }
    void advance();

private:
    Order m_;
    Order k_ = 0;
    ExactInt value_ = 1;
};

/// Term values f(1), ..., f(m) of an order-m transform.
template <class T>
struct TransformKernel {
    std::vector<T> terms;

    Order order() const { return static_cast<Order>(terms.size()); }
    /// f(k), 1-based.
    const T& at(Order k) const { return terms[k - 1]; }
};

/// sum_{k=1}^m C(m,k) (-1)^(k+1) f(k), exactly. An empty kernel sums to 0.
ExactRational alt_binom_sum(const TransformKernel<ExactRational>& kernel);

/// Same sum at `bits` precision, accumulated for k = 1..m in that order.
BigReal alt_binom_sum(const TransformKernel<BigReal>& kernel, Bits bits);

/// g_m(z) = m! / ((z+1)(z+2)...(z+m)), exact for rational z. Throws
/// std::domain_error when z is one of the poles -1, ..., -m and
/// std::invalid_argument for m = 0.
ExactRational g_m(const ExactRational& z, Order m);
BigReal g_m(const BigReal& z, Order m);

struct GmValue {
    Order m;
    std::variant<ExactRational, BigReal> z;
    std::variant<ExactRational, BigReal> value;
};

GmValue make_gm_value(const ExactRational& z, Order m);
GmValue make_gm_value(const BigReal& z, Order m);

/// Both sides of an exact identity check.
template <class T>
struct IdentityReport {
    T lhs;
    T rhs;
    bool equal() const { return lhs == rhs; }
};

/// sum_{k=0}^m C(m,k)(-1)^k/(k+z) against g_m(z)/z. Rejects z <= 0 with
/// std::domain_error.
IdentityReport<ExactRational> lemma7_check(Order m, const ExactRational& z);

/// C(m,k)/k against sum_{n=k}^m C(n,k)/n, for 1 <= k <= m.
IdentityReport<ExactRational> lemma9_check(Order m, Order k);

/// sum_{k=n}^j (-1)^(k+n) C(j,k) against C(j-1,n-1), for 1 <= n <= j.
IdentityReport<ExactInt> lemma10_check(Order j, Order n);

/// H_m = 1 + 1/2 + ... + 1/m, exact.
ExactRational harmonic_number(Order m);

/// 1/(z0^2 H_m): dominates g_m(z)/z for every z >= z0 > 0.
BigReal uniform_bound(const BigReal& z0, Order m);
ExactRational uniform_bound(const ExactRational& z0, Order m);

} // namespace bintrans
