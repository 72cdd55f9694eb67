#include "bintrans/constants.hpp"

#include <stdexcept>

#include "bintrans/reference.hpp"
#include "bintrans/transform.hpp"

namespace bintrans {

namespace {

void require_positive(const ExactRational& u) {
    if (u <= 0)
        throw std::domain_error("u must be > 0");
}

void require_positive(const BigReal& u) {
    if (!(u.sign() > 0) || !u.is_finite())
        throw std::domain_error("u must be > 0");
}

void require_order(Order m, const char* what) {
    if (m == 0)
        throw std::invalid_argument(std::string(what) + ": order must be >= 1");
}

// u / H_m, the Lemma-8 style bound on g_m(1/u).
BigReal thm1_bound(const BigReal& u, Order m, Bits bits) {
    return u.rounded(bits) / BigReal::from_rational(harmonic_number(m), bits);
}

} // namespace

PartialResult thm1_partial(const ExactRational& u, Order m, const PrecisionPolicy& policy) {
    require_positive(u);
    require_order(m, "thm1_partial");
    const Bits bits = policy.working_bits(m);
    TransformKernel<ExactRational> kernel;
    kernel.terms.reserve(m);
    for (Order k = 1; k <= m; ++k)
        kernel.terms.emplace_back(1 / (u * k + 1));

    PartialResult r;
    r.order = m;
    const ExactRational exact = alt_binom_sum(kernel);
    r.exact_value = exact;
    r.exact_residual = g_m(ExactRational(1 / u), m);
    r.value = BigReal::from_rational(exact, bits);
    r.reference_error = BigReal::from_rational(ExactRational(1 - exact), bits);
    r.proven_bound = thm1_bound(BigReal::from_rational(u, bits), m, bits);
    return r;
}

PartialResult thm1_partial(const BigReal& u, Order m, const PrecisionPolicy& policy) {
    require_positive(u);
    require_order(m, "thm1_partial");
    const Bits bits = policy.working_bits(m);
    const BigReal uu = u.rounded(bits);
    TransformKernel<BigReal> kernel;
    kernel.terms.reserve(m);
    for (Order k = 1; k <= m; ++k)
        kernel.terms.push_back(BigReal(1, bits) / (uu * static_cast<long>(k) + 1L));

    PartialResult r;
    r.order = m;
    r.value = alt_binom_sum(kernel, bits);
    r.reference_error = BigReal(1, bits) - r.value;
    r.proven_bound = thm1_bound(uu, m, bits);
    return r;
}

PartialResult remark2_single(const BigReal& u, Order m, const PrecisionPolicy& policy) {
    require_positive(u);
    require_order(m, "remark2_single");
    const Bits bits = policy.working_bits(m);
    const BigReal uu = u.rounded(bits);
    TransformKernel<BigReal> kernel;
    kernel.terms.reserve(m);
    for (Order k = 1; k <= m; ++k)
        kernel.terms.push_back(log(uu * static_cast<long>(k) + 1L) / static_cast<long>(k));

    PartialResult r;
    r.order = m;
    r.value = alt_binom_sum(kernel, bits);
    r.reference_error = uu - r.value;
    return r;
}

PartialResult remark2_double(const BigReal& u, Order outer, const PrecisionPolicy& policy) {
    require_positive(u);
    require_order(outer, "remark2_double");
    const Bits bits = policy.working_bits(outer);
    const BigReal uu = u.rounded(bits);
    std::vector<BigReal> logs;
    logs.reserve(outer);
    for (Order k = 1; k <= outer; ++k)
        logs.push_back(log(uu * static_cast<long>(k) + 1L));

    BigReal total(bits);
    BigReal inner(bits);
    BigReal term(bits);
    for (Order n = 1; n <= outer; ++n) {
        inner = BigReal(bits);
        BinomialRow c(n);
        for (Order k = 1; k <= n; ++k) {
            c.advance();
            mpfr_mul_z(term.get(), logs[k - 1].get(), c.value().get_mpz_t(), MPFR_RNDN);
            if (k % 2 == 1)
                inner += term;
            else
                inner -= term;
        }
        total += inner / static_cast<long>(n);
    }

    PartialResult r;
    r.order = outer;
    r.value = total;
    r.reference_error = uu - total;
    return r;
}

namespace {

void finish_product(ProductResult& out, const ExactRational& u, Order order, Bits bits) {
    out.result.order = order;
    out.result.exact_value = out.exact.to_rational();
    out.result.value = out.exact.to_bigreal(bits);
    out.result.reference_error = BigReal::from_rational(u, bits) - out.result.value;
}

} // namespace

ProductResult cor3_product_single(const ExactRational& u, Order m, const PrecisionPolicy& policy) {
    require_positive(u);
    require_order(m, "cor3_product_single");
    ProductResult out;
    BinomialRow c(m);
    for (Order k = 1; k <= m; ++k) {
        c.advance();
        out.exact.multiply_power(u + k, k % 2 == 1 ? c.value() : ExactInt(-c.value()));
    }
    finish_product(out, u, m, policy.working_bits(m));
    return out;
}

ProductResult cor3_product_double(const ExactRational& u, Order outer, const PrecisionPolicy& policy) {
    require_positive(u);
    ProductResult out;
    out.factors.reserve(outer + 1);
    for (Order n = 0; n <= outer; ++n) {
        FactoredRational factor;
        BinomialRow c(n);
        for (Order k = 0; k <= n; ++k) {
            if (k > 0)
                c.advance();
            factor.multiply_power(u + (k + 1), k % 2 == 0 ? c.value() : ExactInt(-c.value()));
        }
        out.exact *= factor;
        out.factors.push_back(std::move(factor));
    }
    finish_product(out, u, outer, policy.working_bits(outer));
    return out;
}

PartialResult thm4_partial(Order m, const PrecisionPolicy& policy) {
    require_order(m, "thm4_partial");
    const Bits bits = policy.working_bits(m);
    TransformKernel<BigReal> kernel;
    kernel.terms.reserve(m);
    BigReal log_factorial(bits);
    for (Order k = 1; k <= m; ++k) {
        if (k >= 2)
            log_factorial += log(BigReal(static_cast<long>(k), bits));
        kernel.terms.push_back(log_factorial / static_cast<long>(k));
    }

    PartialResult r;
    r.order = m;
    r.value = -alt_binom_sum(kernel, bits);
    const BigReal gamma = gamma_reference(bits);
    r.reference_error = gamma - r.value;
    if (m >= 2)
        r.proven_bound = gamma * 2L / static_cast<long>(m + 1);
    return r;
}

RemainderSeries gamma_remainder_series(Order m, Order truncation, const PrecisionPolicy& policy) {
    require_order(m, "gamma_remainder_series");
    return remainder_series(NodeSet::first(m), truncation, policy, pow2(-policy.target_bits(), 64));
}

PartialResult cor5_partial(Order outer, const PrecisionPolicy& policy) {
    require_order(outer, "cor5_partial");
    const Bits bits = policy.working_bits(outer);
    std::vector<BigReal> logs;
    logs.reserve(outer);
    for (Order i = 1; i <= outer; ++i)
        logs.push_back(log(BigReal(static_cast<long>(i), bits)));

    BigReal total(bits);
    BigReal inner(bits);
    BigReal term(bits);
    for (Order j = 1; j <= outer; ++j) {
        inner = BigReal(bits);
        BinomialRow c(j - 1);
        for (Order i = 1; i <= j; ++i) {
            if (i > 1)
                c.advance();
            mpfr_mul_z(term.get(), logs[i - 1].get(), c.value().get_mpz_t(), MPFR_RNDN);
            if (i % 2 == 0)
                inner += term;
            else
                inner -= term;
        }
        total += inner / static_cast<long>(j);
    }

    PartialResult r;
    r.order = outer;
    r.value = total;
    r.reference_error = gamma_reference(bits) - total;
    return r;
}

ConvergenceTable::ConvergenceTable(std::string formula, std::optional<std::string> parameter, BigReal reference)
    : formula_(std::move(formula)), parameter_(std::move(parameter)), reference_(std::move(reference)) {}

void ConvergenceTable::append(PartialResult row) {
    if (!rows_.empty() && row.order <= rows_.back().order)
        throw std::invalid_argument("convergence table rows must be strictly increasing in order");
    rows_.push_back(std::move(row));
}

} // namespace bintrans
