#include "bintrans/transform.hpp"

#include <stdexcept>

namespace bintrans {

void BinomialRow::advance() {
    value_ *= m_ - k_;
    ++k_;
    mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(), k_);
}

ExactRational alt_binom_sum(const TransformKernel<ExactRational>& kernel) {
    const Order m = kernel.order();
    ExactRational sum = 0;
    BinomialRow c(m);
    for (Order k = 1; k <= m; ++k) {
        c.advance();
        ExactRational term = kernel.at(k) * c.value();
        if (k % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

BigReal alt_binom_sum(const TransformKernel<BigReal>& kernel, Bits bits) {
    const Order m = kernel.order();
    BigReal sum(bits);
    BigReal term(bits);
    BinomialRow c(m);
    for (Order k = 1; k <= m; ++k) {
        c.advance();
        mpfr_mul_z(term.get(), kernel.at(k).get(), c.value().get_mpz_t(), MPFR_RNDN);
        if (k % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

namespace {

void require_order(Order m) {
    if (m == 0)
        throw std::invalid_argument("g_m: m must be >= 1");
}

} // namespace

ExactRational g_m(const ExactRational& z, Order m) {
    require_order(m);
    ExactRational value = 1;
    for (Order i = 1; i <= m; ++i) {
        ExactRational denom = z + i;
        if (denom == 0)
            throw std::domain_error("g_m: z is a pole (z = -" + std::to_string(i) + ")");
        value *= i;
        value /= denom;
    }
    return value;
}

BigReal g_m(const BigReal& z, Order m) {
    require_order(m);
    const Bits bits = z.precision();
    BigReal value(1, bits);
    for (Order i = 1; i <= m; ++i) {
        BigReal denom = z + static_cast<long>(i);
        if (denom.is_zero())
            throw std::domain_error("g_m: z is a pole (z = -" + std::to_string(i) + ")");
        value = value * static_cast<long>(i) / denom;
    }
    return value;
}

GmValue make_gm_value(const ExactRational& z, Order m) { return {m, z, g_m(z, m)}; }

GmValue make_gm_value(const BigReal& z, Order m) { return {m, z, g_m(z, m)}; }

IdentityReport<ExactRational> lemma7_check(Order m, const ExactRational& z) {
    if (z <= 0)
        throw std::domain_error("lemma7_check: z must be > 0");
    if (m == 0)
        throw std::invalid_argument("lemma7_check: m must be >= 1");
    ExactRational lhs = 0;
    BinomialRow c(m);
    for (Order k = 0; k <= m; ++k) {
        if (k > 0)
            c.advance();
        ExactRational term = c.value() / (z + k);
        if (k % 2 == 0)
            lhs += term;
        else
            lhs -= term;
    }
    ExactRational rhs = g_m(z, m) / z;
    return {lhs, rhs};
}

IdentityReport<ExactRational> lemma9_check(Order m, Order k) {
    if (k < 1 || k > m)
        throw std::invalid_argument("lemma9_check: need 1 <= k <= m");
    ExactRational lhs(binomial(static_cast<long>(m), static_cast<long>(k)), ExactInt(k));
    lhs.canonicalize();
    ExactRational rhs = 0;
    for (Order n = k; n <= m; ++n) {
        ExactRational term(binomial(static_cast<long>(n), static_cast<long>(k)), ExactInt(n));
        term.canonicalize();
        rhs += term;
    }
    return {lhs, rhs};
}

IdentityReport<ExactInt> lemma10_check(Order j, Order n) {
    if (n < 1 || n > j)
        throw std::invalid_argument("lemma10_check: need 1 <= n <= j");
    ExactInt lhs = 0;
    for (Order k = n; k <= j; ++k) {
        const ExactInt c = binomial(static_cast<long>(j), static_cast<long>(k));
        if ((k + n) % 2 == 0)
            lhs += c;
        else
            lhs -= c;
    }
    return {lhs, binomial(static_cast<long>(j) - 1, static_cast<long>(n) - 1)};
}

ExactRational harmonic_number(Order m) {
    ExactRational h = 0;
    for (Order i = 1; i <= m; ++i)
        h += ExactRational(1, i);
    return h;
}

BigReal uniform_bound(const BigReal& z0, Order m) {
    if (z0.sign() <= 0)
        throw std::domain_error("uniform_bound: z0 must be > 0");
    require_order(m);
    const BigReal h = BigReal::from_rational(harmonic_number(m), z0.precision());
    return BigReal(1, z0.precision()) / (z0 * z0 * h);
}

ExactRational uniform_bound(const ExactRational& z0, Order m) {
    if (z0 <= 0)
        throw std::domain_error("uniform_bound: z0 must be > 0");
    require_order(m);
    return 1 / (z0 * z0 * harmonic_number(m));
}

} // namespace bintrans
