#include "bintrans/remainder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "bintrans/reference.hpp"

namespace bintrans {

NodeSet::NodeSet(std::vector<unsigned long> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty())
        throw std::invalid_argument("node set must not be empty");
    std::set<unsigned long> seen;
    for (unsigned long a : nodes_) {
        if (a < 1)
            throw std::invalid_argument("nodes must be positive integers");
        if (!seen.insert(a).second)
            throw std::invalid_argument("nodes must be pairwise distinct (repeated " + std::to_string(a) + ")");
    }
}

NodeSet NodeSet::first(Order m) {
    std::vector<unsigned long> v(m);
    for (Order i = 0; i < m; ++i)
        v[i] = i + 1;
    return NodeSet(std::move(v));
}

unsigned long NodeSet::max() const { return *std::max_element(nodes_.begin(), nodes_.end()); }

ExactInt NodeSet::product() const {
    ExactInt p = 1;
    for (unsigned long a : nodes_)
        p *= a;
    return p;
}

LagrangeWeights lagrange_weights(const NodeSet& nodes) {
    LagrangeWeights out{nodes, {}};
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        ExactRational w = 1;
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            if (n == k)
                continue;
            const ExactInt an(nodes[n]);
            ExactRational factor(an, ExactInt(an - nodes[k]));
            factor.canonicalize();
            w *= factor;
        }
        out.weights.push_back(w);
    }
    return out;
}

RemainderIntegrand partial_fractions(const NodeSet& nodes) {
    RemainderIntegrand out{nodes, {}, 1};
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const ExactRational pole(-1, nodes[k]);
        ExactRational num = 1;
        ExactRational den = 1;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const ExactRational ax = pole * nodes[i];
            num *= ax;
            if (i != k)
                den *= 1 + ax;
        }
        out.coefficients.push_back(num / den);
    }
    return out;
}

BigReal integrand_direct(const NodeSet& nodes, const BigReal& x) {
    BigReal value(1, x.precision());
    for (unsigned long a : nodes.values()) {
        const BigReal ax = x * static_cast<long>(a);
        value *= ax / (ax + 1L);
    }
    return value;
}

BigReal integrand_reconstructed(const RemainderIntegrand& integrand, const BigReal& x) {
    BigReal value = BigReal::from_rational(integrand.constant, x.precision());
    for (std::size_t k = 0; k < integrand.nodes.size(); ++k) {
        const BigReal denom = x * static_cast<long>(integrand.nodes[k]) + 1L;
        value += BigReal::from_rational(integrand.coefficients[k], x.precision()) / denom;
    }
    return value;
}

Bits remainder_bits(const NodeSet& nodes, const PrecisionPolicy& policy) {
    return policy.working_bits(static_cast<Order>(nodes.size()));
}

namespace {

// d_k = c_k / a_k, the weights of ln(1 + a_k/x) in the integral.
std::vector<ExactRational> log_weights(const RemainderIntegrand& integrand) {
    std::vector<ExactRational> d;
    for (std::size_t k = 0; k < integrand.nodes.size(); ++k)
        d.push_back(integrand.coefficients[k] / integrand.nodes[k]);
    return d;
}

long bit_length_of(const ExactRational& q) {
    if (q == 0)
        return 0;
    return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2)) + 1;
}

ExactRational abs_sum(const std::vector<ExactRational>& values) {
    ExactRational s = 0;
    for (const auto& v : values)
        s += abs(v);
    return s;
}

// Closed-form term at precision wp with pre-converted weights.
BigReal closed_form_term(const RemainderIntegrand& integrand, const std::vector<BigReal>& d, Order n, Bits wp) {
    const BigReal nn(static_cast<long>(n), wp);
    BigReal value = BigReal(1, wp) / nn;
    BigReal t(wp);
    for (std::size_t k = 0; k < d.size(); ++k) {
        const BigReal ratio = BigReal(static_cast<long>(integrand.nodes[k]), wp) / nn;
        mpfr_log1p(t.get(), ratio.get(), MPFR_RNDN);
        value += d[k] * t;
    }
    return value;
}

std::vector<BigReal> to_bigreals(const std::vector<ExactRational>& values, Bits wp) {
    std::vector<BigReal> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(BigReal::from_rational(v, wp));
    return out;
}

// log2 of the Euler-Maclaurin remainder bound after K correction pairs
// started at n0: 4/(2 pi)^2K * [ (2K-1)!/n0^2K + S (2K-2)!/n0^(2K-1) ],
// with (2 pi) replaced by 6.
double em_bound_log2(long K, double n0, double weight_sum) {
    const double ln2 = std::log(2.0);
    const double a = std::lgamma(2.0 * K) / ln2 - 2.0 * K * std::log2(n0);
    const double b = weight_sum > 0 ? std::log2(weight_sum) + std::lgamma(2.0 * K - 1.0) / ln2 - (2.0 * K - 1.0) * std::log2(n0)
                                    : -std::numeric_limits<double>::infinity();
    const double hi = std::max(a, b);
    const double combined = hi + std::log2(std::exp2(a - hi) + std::exp2(b - hi));
    return 2.0 - 2.0 * K * std::log2(6.0) + combined;
}

ExactRational em_bound_exact(long K, Order n0, const ExactRational& weight_sum) {
    ExactInt six_pow;
    mpz_ui_pow_ui(six_pow.get_mpz_t(), 6, static_cast<unsigned long>(2 * K));
    ExactInt n_pow;
    mpz_ui_pow_ui(n_pow.get_mpz_t(), n0, static_cast<unsigned long>(2 * K - 1));
    ExactRational bracket(factorial(static_cast<Order>(2 * K - 1)), ExactInt(n_pow * n0));
    bracket.canonicalize();
    ExactRational second(factorial(static_cast<Order>(2 * K - 2)), n_pow);
    second.canonicalize();
    bracket += weight_sum * second;
    return 4 * bracket / six_pow;
}

// Derivative of order r (odd) of t(x) = 1/x + sum d_k [ln(x+a_k) - ln x].
BigReal term_derivative_odd(const std::vector<BigReal>& d, const NodeSet& nodes, const BigReal& x, long r) {
    const Bits wp = x.precision();
    BigReal inv_x_r(wp);
    mpfr_pow_si(inv_x_r.get(), x.get(), -r, MPFR_RNDN);
    BigReal value = -(BigReal::from_integer(factorial(static_cast<Order>(r)), wp) * inv_x_r / x);
    BigReal logs(wp);
    BigReal shifted(wp);
    for (std::size_t k = 0; k < d.size(); ++k) {
        const BigReal xa = x + static_cast<long>(nodes[k]);
        mpfr_pow_si(shifted.get(), xa.get(), -r, MPFR_RNDN);
        logs += d[k] * (shifted - inv_x_r);
    }
    value += logs * factorial(static_cast<Order>(r - 1));
    return value;
}

struct EulerMaclaurinTail {
    BigReal estimate;
    BigReal error_bound;
};

EulerMaclaurinTail euler_maclaurin_tail(const RemainderIntegrand& integrand, const std::vector<ExactRational>& d_exact,
                                        Order n0, long K, Bits wp) {
    const NodeSet& nodes = integrand.nodes;
    const ExactRational weight_sum = abs_sum(d_exact);
    // The antiderivative cancels terms of size S * n0 ln n0 down to O(1/n0).
    const double magnitude = weight_sum.get_d() * (n0 + nodes.max()) * std::log(static_cast<double>(n0 + nodes.max()) + 2.0) + 2.0;
    const Bits wp2 = wp + static_cast<Bits>(std::ceil(std::log2(magnitude))) + 8;

    const std::vector<BigReal> d = to_bigreals(d_exact, wp2);
    const BigReal x(static_cast<long>(n0), wp2);
    const BigReal x_log_x = x * log(x);

    // G(X) = ln X + sum d_k [ (X + a_k) ln(X + a_k) - X ln X - a_k ],  G(inf) = 0.
    BigReal antiderivative = log(x);
    for (std::size_t k = 0; k < d.size(); ++k) {
        const BigReal xa = x + static_cast<long>(nodes[k]);
        antiderivative += d[k] * (xa * log(xa) - x_log_x - static_cast<long>(nodes[k]));
    }
    BigReal estimate = -antiderivative - closed_form_term(integrand, d, n0, wp2) / 2L;

    const auto bern = bernoulli_even(static_cast<std::size_t>(K));
    for (long j = 1; j <= K; ++j) {
        const ExactRational coeff = bern[static_cast<std::size_t>(j - 1)] / factorial(static_cast<Order>(2 * j));
        estimate -= term_derivative_odd(d, nodes, x, 2 * j - 1) * coeff;
    }

    BigReal bound(64);
    mpfr_set_q(bound.get(), em_bound_exact(K, n0, weight_sum).get_mpq_t(), MPFR_RNDU);
    return {estimate.rounded(wp), bound};
}

} // namespace

BigReal remainder_integral(const RemainderIntegrand& integrand, Order n, Bits bits) {
    if (n < 1)
        throw std::invalid_argument("remainder_integral: n must be >= 1");
    const auto d_exact = log_weights(integrand);
    const Bits wp = bits + 32 + std::max(0L, bit_length_of(abs_sum(d_exact)));
    return closed_form_term(integrand, to_bigreals(d_exact, wp), n, wp).rounded(bits);
}

BigReal remainder_integral(const NodeSet& nodes, Order n, const PrecisionPolicy& policy) {
    return remainder_integral(partial_fractions(nodes), n, remainder_bits(nodes, policy));
}

QuadratureResult remainder_integral_quadrature(const NodeSet& nodes, Order n, const PrecisionPolicy& policy) {
    if (n < 1)
        throw std::invalid_argument("remainder_integral_quadrature: n must be >= 1");
    const Bits bits = remainder_bits(nodes, policy);
    const Bits wp = bits + 16;
    const BigReal upper = BigReal(1, wp) / static_cast<long>(n);
    auto f = [&nodes](const BigReal& x) { return integrand_direct(nodes, x); };
    QuadratureResult r = integrate_adaptive(f, BigReal(wp), upper, wp, pow2(-bits, 64));
    r.value = r.value.rounded(bits);
    return r;
}

RemainderSeries remainder_series(const NodeSet& nodes, Order truncation, const PrecisionPolicy& policy,
                                 const BigReal& tail_target) {
    const Bits bits = remainder_bits(nodes, policy);
    const RemainderIntegrand integrand = partial_fractions(nodes);
    const auto d_exact = log_weights(integrand);
    const ExactRational weight_sum = abs_sum(d_exact);
    const Bits wp = bits + 32 + std::max(0L, bit_length_of(weight_sum));
    const std::vector<BigReal> d = to_bigreals(d_exact, wp);

    RemainderSeries out;
    out.truncation = truncation;
    out.partial = BigReal(wp);
    for (Order n = 1; n <= truncation; ++n)
        out.partial += closed_form_term(integrand, d, n, wp);

    const Order m = static_cast<Order>(nodes.size());
    out.truncation_bound = BigReal(64);
    if (truncation == 0) {
        mpfr_set_inf(out.truncation_bound.get(), 1);
    } else {
        ExactInt n_pow;
        mpz_ui_pow_ui(n_pow.get_mpz_t(), truncation, m);
        const ExactRational tb(nodes.product(), ExactInt(n_pow * ((m + 1) * m)));
        mpfr_set_q(out.truncation_bound.get(), tb.get_mpq_t(), MPFR_RNDU);
    }

    BigReal target = pow2(-bits, 64);
    if (tail_target > target)
        target = tail_target.rounded(64);
    const double target_log2 = std::log2(std::max(target.to_double(), 1e-300));
    const double wsum = weight_sum.get_d();

    // Pick the Euler-Maclaurin start n0 and order K; push n0 out until the
    // remainder bound meets the target.
    Order n0 = std::max<Order>(truncation, 2 * nodes.max() + 16);
    long K = 1;
    for (;;) {
        double best = std::numeric_limits<double>::infinity();
        long best_k = 1;
        const long k_max = static_cast<long>(std::min<Order>(3 * n0 + 2, 4000));
        for (long k = 1; k <= k_max; ++k) {
            const double lb = em_bound_log2(k, static_cast<double>(n0), wsum);
            if (lb < best) {
                best = lb;
                best_k = k;
            }
            if (lb < target_log2 - 2.0)
                break;
        }
        if (best < target_log2 - 2.0) {
            K = best_k;
            break;
        }
        n0 *= 2;
    }

    BigReal direct(wp);
    for (Order n = truncation + 1; n <= n0; ++n)
        direct += closed_form_term(integrand, d, n, wp);
    const EulerMaclaurinTail em = euler_maclaurin_tail(integrand, d_exact, n0, K, wp);
    out.tail_estimate = (direct + em.estimate).rounded(bits);
    out.tail_error_bound = em.error_bound;
    out.partial = out.partial.rounded(bits);
    return out;
}

} // namespace bintrans
