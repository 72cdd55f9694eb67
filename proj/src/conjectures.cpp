#include "bintrans/conjectures.hpp"

#include <cmath>
#include <stdexcept>

#include "bintrans/reference.hpp"
#include "bintrans/transform.hpp"

namespace bintrans {

NestedLogArgs::NestedLogArgs(std::vector<BigReal> z) : z_(std::move(z)) {
    if (z_.empty())
        throw std::invalid_argument("nested log needs at least one z");
    for (const auto& zi : z_)
        if (!(zi.sign() > 0) || !zi.is_finite())
            throw std::invalid_argument("every z_i must be > 0");
}

BigReal NestedLogArgs::product(Bits bits) const {
    BigReal p(1, bits);
    for (const auto& zi : z_)
        p *= zi.rounded(bits);
    return p;
}

PartialResult conj1_partial(const NestedLogArgs& args, Order m, const PrecisionPolicy& policy) {
    if (m == 0)
        throw std::invalid_argument("conj1_partial: order must be >= 1");
    const Bits bits = policy.working_bits(m);
    std::vector<BigReal> z;
    for (const auto& zi : args.values())
        z.push_back(zi.rounded(bits));

    TransformKernel<BigReal> kernel;
    kernel.terms.reserve(m);
    for (Order k = 1; k <= m; ++k) {
        // Innermost level is z_n k; each level wraps v -> ln(1 + z_i v).
        BigReal v = z.back() * static_cast<long>(k);
        for (std::size_t i = z.size(); i-- > 0;) {
            if (i + 1 < z.size())
                v = z[i] * v;
            BigReal arg = v + 1L;
            if (!(arg.sign() > 0))
                throw std::domain_error("conj1_partial: nested log argument is not positive");
            v = log(arg);
        }
        kernel.terms.push_back(v / static_cast<long>(k));
    }

    PartialResult r;
    r.order = m;
    r.value = alt_binom_sum(kernel, bits);
    r.reference_error = args.product(bits) - r.value;
    return r;
}

BigReal conj2_reference(const BigReal& z, Bits bits) {
    if (z.sign() < 0)
        throw std::domain_error("conj2_reference: z must be >= 0");
    // Terms peak near n = sqrt(z) at about e^(2 sqrt z); carry that many
    // extra bits through the cancellation.
    const double zd = z.to_double();
    const Bits wp = bits + 16 + static_cast<Bits>(std::ceil(2.0 * std::sqrt(zd) * 1.4427)) + 8;
    const BigReal zz = z.rounded(wp);
    const BigReal stop = pow2(-(bits + 8), 64);
    BigReal term(1, wp);
    BigReal sum(1, wp);
    for (long n = 1;; ++n) {
        term = term * zz / (n * n);
        if (n % 2 == 1)
            sum -= term;
        else
            sum += term;
        // Once (n+1)^2 > z the terms decrease, so the next term bounds the tail.
        if (static_cast<double>(n + 1) * static_cast<double>(n + 1) > zd && abs(term) < stop)
            break;
    }
    return sum.rounded(bits);
}

PartialResult conj2_partial(const BigReal& z, Order m, const PrecisionPolicy& policy) {
    if (z.sign() < 0)
        throw std::domain_error("z must be >= 0");
    if (m == 0)
        throw std::invalid_argument("conj2_partial: order must be >= 1");
    const Bits bits = policy.working_bits(m);
    const BigReal zz = z.rounded(bits);
    TransformKernel<BigReal> kernel;
    kernel.terms.reserve(m);
    for (Order n = 1; n <= m; ++n)
        kernel.terms.push_back(BigReal(1, bits) / (zz * static_cast<long>(n + 1) + 1L));

    PartialResult r;
    r.order = m;
    r.value = alt_binom_sum(kernel, bits);
    r.reference_error = conj2_reference(zz, bits) - r.value;
    return r;
}

PartialResult conj3_partial(Order m, const PrecisionPolicy& policy) {
    if (m == 0)
        throw std::invalid_argument("conj3_partial: order must be >= 1");
    const Bits bits = policy.working_bits(m);
    ExactRational weight = 0;
    for (Order n = 1; n <= m; ++n) {
        ExactInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, n - 1);
        weight += ExactRational(p, ExactInt(n));
    }
    weight.canonicalize();
    const BigReal w = BigReal::from_rational(weight, bits);

    // ln(k!!) by ln k + ln((k-2)!!); the term needs ln(k!!) - ln((k-1)!!).
    std::vector<BigReal> log_df(m + 1, BigReal(bits));
    for (Order k = 2; k <= m; ++k)
        log_df[k] = log_df[k - 2] + log(BigReal(static_cast<long>(k), bits));

    TransformKernel<BigReal> kernel;
    kernel.terms.reserve(m);
    for (Order k = 1; k <= m; ++k)
        kernel.terms.push_back((log_df[k] - log_df[k - 1]) / (w * static_cast<long>(k)));

    PartialResult r;
    r.order = m;
    r.value = -alt_binom_sum(kernel, bits);
    r.reference_error = ln_pi_half_reference(bits) - r.value;
    return r;
}

BigReal conj4_finite_part(const NodeSet& nodes, Bits bits) {
    const LagrangeWeights weights = lagrange_weights(nodes);
    const Bits wp = bits + 32;
    BigReal sum(wp);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        BigReal log_factorial(wp);
        for (unsigned long j = 2; j <= nodes[i]; ++j)
            log_factorial += log(BigReal(static_cast<long>(j), wp));
        sum += log_factorial * weights.weights[i] / static_cast<long>(nodes[i]);
    }
    return sum.rounded(bits);
}

Conj4Report conj4_residual(const NodeSet& nodes, const PrecisionPolicy& policy, const BigReal& tail_target) {
    const Bits bits = remainder_bits(nodes, policy);
    BigReal finite = conj4_finite_part(nodes, bits);
    RemainderSeries series = remainder_series(nodes, 0, policy, tail_target);
    BigReal residual = finite + series.total() - gamma_reference(bits);
    return {std::move(finite), std::move(series), std::move(residual)};
}

PartialResult conj4_truncated(const NodeSet& nodes, Order truncation, const PrecisionPolicy& policy) {
    if (truncation == 0)
        throw std::invalid_argument("conj4_truncated: truncation must be >= 1");
    const Bits bits = remainder_bits(nodes, policy);
    const RemainderIntegrand integrand = partial_fractions(nodes);
    BigReal value = conj4_finite_part(nodes, bits);
    for (Order n = 1; n <= truncation; ++n)
        value += remainder_integral(integrand, n, bits);

    PartialResult r;
    r.order = truncation;
    r.reference_error = gamma_reference(bits) - value;
    r.value = std::move(value);
    return r;
}

RemainderSeries y_k(Order k, const PrecisionPolicy& policy, const BigReal& tail_target) {
    if (k == 0)
        throw std::invalid_argument("y_k: k must be >= 1");
    return remainder_series(NodeSet{k}, 0, policy, tail_target);
}

std::string to_string(ConjectureStatus status) {
    switch (status) {
    case ConjectureStatus::Supported:
        return "SUPPORTED";
    case ConjectureStatus::Inconclusive:
        return "INCONCLUSIVE";
    case ConjectureStatus::RefutedAtTolerance:
        return "REFUTED-at-tolerance";
    }
    return "INCONCLUSIVE";
}

double aitken_limit(const ResidualTrail& trail) {
    if (trail.empty())
        return 0.0;
    const double last = trail.back().second.to_double();
    if (trail.size() < 3)
        return last;
    const double r0 = trail[trail.size() - 3].second.to_double();
    const double r1 = trail[trail.size() - 2].second.to_double();
    const double d1 = last - r1;
    const double d0 = r1 - r0;
    if (d1 == d0)
        return last;
    return last - d1 * d1 / (d1 - d0);
}

ConjectureStatus classify(const ResidualTrail& trail, double tolerance) {
    if (trail.size() < 2)
        return ConjectureStatus::Inconclusive;
    bool decreasing = true;
    for (std::size_t i = 1; i < trail.size(); ++i)
        if (!(abs(trail[i].second) < abs(trail[i - 1].second)))
            decreasing = false;
    const double last = std::abs(trail.back().second.to_double());
    const double before = std::abs(trail[trail.size() - 2].second.to_double());
    const double limit = std::abs(aitken_limit(trail));
    if (decreasing && (last <= tolerance || limit <= tolerance))
        return ConjectureStatus::Supported;
    if (last > tolerance && (last >= before || limit > tolerance))
        return ConjectureStatus::RefutedAtTolerance;
    return ConjectureStatus::Inconclusive;
}

} // namespace bintrans
