#include <doctest.h>

#include "bintrans/constants.hpp"
#include "bintrans/reference.hpp"
#include "bintrans/transform.hpp"

using namespace bintrans;

namespace {

const PrecisionPolicy kPolicy(128);

BigReal real(long p, long q = 1, Bits bits = 256) { return BigReal::from_rational(ExactRational(p, q), bits); }

bool close(const BigReal& a, const BigReal& b, Bits bits = 110) { return abs(a - b) < pow2(-bits, 64); }

BigReal ln(long x) { return log(BigReal(x, 256)); }

} // namespace

TEST_CASE("thm1 examples") {
    PartialResult r = thm1_partial(ExactRational(1), 3, kPolicy);
    CHECK(*r.exact_value == ExactRational(3, 4));
    CHECK(*r.exact_residual == ExactRational(1, 4));
    r = thm1_partial(ExactRational(1), 1, kPolicy);
    CHECK(*r.exact_value == ExactRational(1, 2));
    CHECK(*r.exact_residual == ExactRational(1, 2));
    r = thm1_partial(ExactRational(2), 2, kPolicy);
    CHECK(*r.exact_value == ExactRational(7, 15));
    CHECK(*r.exact_residual == ExactRational(8, 15));
    CHECK(close(r.value, real(7, 15)));
    CHECK_THROWS_AS(thm1_partial(ExactRational(0), 3, kPolicy), std::domain_error);
    CHECK_THROWS_AS(thm1_partial(ExactRational(-1), 3, kPolicy), std::domain_error);
}

TEST_CASE("thm1 exact residual and bound") {
    for (const auto& u : {ExactRational(1), ExactRational(2), ExactRational(1, 2), ExactRational(3), ExactRational(7, 3)})
        for (Order m = 1; m <= 40; ++m) {
            const PartialResult r = thm1_partial(u, m, kPolicy);
            REQUIRE(*r.exact_value + g_m(1 / u, m) == 1);
            REQUIRE(*r.exact_value + *r.exact_residual == 1);
            REQUIRE(abs(*r.reference_error) <= *r.proven_bound);
        }
    const PartialResult a = thm1_partial(real(3, 2), 12, kPolicy);
    const PartialResult b = thm1_partial(ExactRational(3, 2), 12, kPolicy);
    CHECK(close(a.value, b.value));
}

TEST_CASE("remark2 single") {
    CHECK(close(remark2_single(real(1), 1, kPolicy).value, ln(2)));
    CHECK(close(remark2_single(real(1), 2, kPolicy).value, ln(2) * 2L - ln(3) / 2L));
    const PartialResult r20 = remark2_single(real(1), 20, kPolicy);
    const PartialResult r40 = remark2_single(real(1), 40, kPolicy);
    CHECK(abs(*r40.reference_error) < BigReal::from_string("0.06", 64));
    CHECK(abs(*r40.reference_error) < abs(*r20.reference_error));
    CHECK_THROWS_AS(remark2_single(real(0), 3, kPolicy), std::domain_error);
}

TEST_CASE("remark2 double") {
    CHECK(close(remark2_double(real(1), 1, kPolicy).value, ln(2)));
    CHECK(close(remark2_double(real(1), 2, kPolicy).value, ln(2) + (ln(2) * 2L - ln(3)) / 2L));
    // Regrouping the triangle k <= n <= M: the coefficient of ln(ku+1) is
    // sum_{n=k}^M C(n,k)/n = C(M,k)/k, so both orders give the same sum.
    for (Order M = 1; M <= 30; ++M)
        for (Order k = 1; k <= M; ++k) {
            ExactRational coeff = 0;
            for (Order n = k; n <= M; ++n)
                coeff += ExactRational(binomial(n, k), ExactInt(n));
            coeff.canonicalize();
            ExactRational want(binomial(M, k), ExactInt(k));
            want.canonicalize();
            REQUIRE(coeff == want);
        }
    for (Order M : {1ul, 5ul, 17ul, 40ul})
        CHECK(close(remark2_double(real(3, 2), M, kPolicy).value, remark2_single(real(3, 2), M, kPolicy).value));
    const PartialResult d50 = remark2_double(real(1), 50, kPolicy);
    const PartialResult d200 = remark2_double(real(1), 200, kPolicy);
    CHECK(abs(*d200.reference_error) < abs(*d50.reference_error));
}

TEST_CASE("cor3 single product") {
    CHECK(cor3_product_single(ExactRational(2), 1, kPolicy).exact.to_rational() == ExactRational(3));
    CHECK(cor3_product_single(ExactRational(2), 2, kPolicy).exact.to_rational() == ExactRational(9, 4));
    const ProductResult p = cor3_product_single(ExactRational(2), 3, kPolicy);
    CHECK(p.exact.to_rational() == ExactRational(135, 64));
    CHECK(close(p.result.value, real(135, 64)));
    CHECK_THROWS_AS(cor3_product_single(ExactRational(0), 3, kPolicy), std::domain_error);

    // ln of the product against the alternating sum of ln(k+u)
    for (long u = 1; u <= 3; ++u)
        for (Order m = 1; m <= 30; ++m) {
            const Bits bits = kPolicy.working_bits(m);
            const ProductResult q = cor3_product_single(ExactRational(u), m, kPolicy);
            TransformKernel<BigReal> kernel;
            for (Order k = 1; k <= m; ++k)
                kernel.terms.push_back(log(BigReal(static_cast<long>(k) + u, bits)));
            REQUIRE(close(log(q.result.value), alt_binom_sum(kernel, bits), 120));
        }
}

TEST_CASE("cor3 double product factors") {
    const std::vector<std::pair<long, std::vector<ExactRational>>> displayed = {
        {1, {ExactRational(2, 1), ExactRational(2, 3), ExactRational(8, 9), ExactRational(128, 135)}},
        {2, {ExactRational(3, 1), ExactRational(3, 4), ExactRational(15, 16), ExactRational(125, 128)}},
        {3, {ExactRational(4, 1), ExactRational(4, 5), ExactRational(24, 25), ExactRational(864, 875)}},
    };
    for (const auto& [u, want] : displayed) {
        const ProductResult p = cor3_product_double(ExactRational(u), 3, kPolicy);
        REQUIRE(p.factors.size() == 4);
        ExactRational product = 1;
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(p.factors[i].to_rational() == want[i]);
            product *= want[i];
        }
        CHECK(p.exact.to_rational() == product);
    }
    CHECK(cor3_product_double(ExactRational(1), 0, kPolicy).exact.to_rational() == ExactRational(2));
}

TEST_CASE("thm4 sandwich") {
    const Bits bits = 256;
    const PrecisionPolicy policy(bits);
    const BigReal gamma = gamma_reference(bits);
    const PartialResult r1 = thm4_partial(1, policy);
    CHECK(r1.value.is_zero());
    CHECK(close(*r1.reference_error, gamma, 250));
    CHECK_FALSE(r1.proven_bound);

    const PartialResult r2 = thm4_partial(2, policy);
    CHECK(close(r2.value, ln(2) / 2L));
    CHECK(r2.reference_error->to_decimal(5) == "0.23064");
    CHECK(r2.proven_bound->to_decimal(5) == "0.38481");

    for (Order m = 2; m <= 200; ++m) {
        const PartialResult r = thm4_partial(m, policy);
        REQUIRE(r.reference_error->sign() > 0);
        REQUIRE(*r.reference_error < *r.proven_bound);
        REQUIRE(close(*r.proven_bound, gamma * 2L / static_cast<long>(m + 1), 250));
    }
}

TEST_CASE("S_1 equals gamma") {
    const RemainderSeries s = gamma_remainder_series(1, 1, kPolicy);
    CHECK(close(s.partial, BigReal(1, 256) - ln(2)));
    CHECK(close(s.total(), gamma_reference(256), 120));
    // partial sums H_n - ln(n+1)
    ExactRational h = 0;
    for (long n = 1; n <= 2000; ++n)
        h += ExactRational(1, n);
    const BigReal partial = BigReal::from_rational(h, 256) - ln(2001);
    CHECK(abs(partial - gamma_reference(256)) < BigReal::from_string("2.6e-4", 64));
}

TEST_CASE("remainder series identity") {
    for (Order m : {2ul, 5ul, 10ul}) {
        const RemainderSeries s = gamma_remainder_series(m, 0, kPolicy);
        const PartialResult r = thm4_partial(m, kPolicy);
        CHECK(close(*r.reference_error, s.total(), 120));
        CHECK(s.tail_error_bound < pow2(-128, 64));
    }
}

TEST_CASE("cor5") {
    CHECK(cor5_partial(1, kPolicy).value.is_zero());
    CHECK(close(cor5_partial(2, kPolicy).value, ln(2) / 2L));
    CHECK(abs(*cor5_partial(50, kPolicy).reference_error) < abs(*cor5_partial(10, kPolicy).reference_error));
}

TEST_CASE("monotone error at m = 20 and 40") {
    for (const auto& u : {ExactRational(1, 2), ExactRational(1), ExactRational(2)}) {
        const BigReal ur = BigReal::from_rational(u, 256);
        CHECK(abs(*thm1_partial(u, 40, kPolicy).reference_error) < abs(*thm1_partial(u, 20, kPolicy).reference_error));
        CHECK(abs(*remark2_single(ur, 40, kPolicy).reference_error) <
              abs(*remark2_single(ur, 20, kPolicy).reference_error));
        CHECK(abs(*cor3_product_single(u, 40, kPolicy).result.reference_error) <
              abs(*cor3_product_single(u, 20, kPolicy).result.reference_error));
    }
    CHECK(*thm4_partial(40, kPolicy).reference_error < *thm4_partial(20, kPolicy).reference_error);
}

TEST_CASE("convergence table ordering") {
    ConvergenceTable t("thm4", std::nullopt, gamma_reference(128));
    t.append(thm4_partial(2, kPolicy));
    t.append(thm4_partial(4, kPolicy));
    CHECK_THROWS_AS(t.append(thm4_partial(4, kPolicy)), std::invalid_argument);
    CHECK_THROWS_AS(t.append(thm4_partial(3, kPolicy)), std::invalid_argument);
    CHECK(t.rows().size() == 2);
}
