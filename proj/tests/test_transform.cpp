#include <doctest.h>

#include "bintrans/transform.hpp"

using namespace bintrans;

namespace {

ExactRational direct_g(const ExactRational& z, Order m) {
    ExactRational den = 1;
    for (Order i = 1; i <= m; ++i)
        den *= z + static_cast<long>(i);
    return ExactRational(factorial(m)) / den;
}

const ExactRational kZs[] = {ExactRational(1), ExactRational(2), ExactRational(1, 2), ExactRational(3, 7),
                             ExactRational(10)};

} // namespace

TEST_CASE("binomial row generation") {
    for (Order m : {1ul, 7ul, 40ul}) {
        BinomialRow row(m);
        for (Order k = 0; k <= m; ++k) {
            REQUIRE(row.k() == k);
            REQUIRE(row.value() == binomial(m, k));
            if (k < m)
                row.advance();
        }
    }
}

TEST_CASE("alt_binom_sum examples") {
    CHECK(alt_binom_sum(TransformKernel<ExactRational>{{ExactRational(5, 7)}}) == ExactRational(5, 7));
    CHECK(alt_binom_sum(TransformKernel<ExactRational>{{ExactRational(1, 2), ExactRational(1, 3)}}) ==
          ExactRational(2, 3));
    CHECK(alt_binom_sum(TransformKernel<ExactRational>{{1, 2, 3}}) == 0);

    TransformKernel<BigReal> real;
    for (long k = 1; k <= 2; ++k)
        real.terms.push_back(BigReal::from_rational(ExactRational(1, k + 1), 128));
    CHECK(abs(alt_binom_sum(real, 128) - BigReal::from_rational(ExactRational(2, 3), 128)) < pow2(-120, 64));
}

TEST_CASE("finite differences of polynomials vanish") {
    // sum_{k=0}^m C(m,k)(-1)^k p(k) = 0 for deg p < m. With the k = 0 term
    // moved across: alt_binom_sum(p) = p(0).
    for (Order m = 1; m <= 12; ++m)
        for (Order d = 0; d < m; ++d) {
            auto p = [&](long k) {
                ExactRational v = 0;
                for (Order i = 0; i <= d; ++i) {
                    ExactInt power = 1;
                    for (Order e = 0; e < i; ++e)
                        power *= k;
                    v += ExactRational(static_cast<long>(i) + 2, 3) * ExactRational(power);
                }
                return v;
            };
            TransformKernel<ExactRational> kernel;
            for (long k = 1; k <= static_cast<long>(m); ++k)
                kernel.terms.push_back(p(k));
            REQUIRE(alt_binom_sum(kernel) == p(0));
        }
}

TEST_CASE("g_m") {
    CHECK(g_m(ExactRational(1), 1) == ExactRational(1, 2));
    CHECK(g_m(ExactRational(1), 2) == ExactRational(1, 3));
    CHECK(g_m(ExactRational(1), 3) == ExactRational(1, 4));
    for (const auto& z : kZs)
        for (Order m = 1; m <= 50; ++m) {
            const ExactRational g = g_m(z, m);
            REQUIRE(g == direct_g(z, m));
            REQUIRE(g > 0);
            REQUIRE(g <= 1);
            REQUIRE(g_m(z, m + 1) < g);
        }
    CHECK_THROWS_AS(g_m(ExactRational(-2), 3), std::domain_error);
    CHECK_NOTHROW(g_m(ExactRational(-5), 3));
    CHECK_THROWS_AS(g_m(ExactRational(1), 0), std::invalid_argument);

    const BigReal real = g_m(BigReal(1, 128), 3);
    CHECK(abs(real - BigReal::from_rational(ExactRational(1, 4), 128)) < pow2(-120, 64));

    const GmValue v = make_gm_value(ExactRational(1), 2);
    CHECK(std::get<ExactRational>(v.value) == ExactRational(1, 3));
}

TEST_CASE("lemma 7 identity") {
    auto r = lemma7_check(2, ExactRational(1));
    CHECK(r.lhs == ExactRational(1, 3));
    CHECK(r.equal());
    r = lemma7_check(1, ExactRational(1, 2));
    CHECK(r.lhs == ExactRational(4, 3));
    CHECK(r.equal());
    CHECK(lemma7_check(1, ExactRational(3, 7)).equal());
    for (const auto& z : kZs)
        for (Order m = 1; m <= 50; ++m)
            REQUIRE(lemma7_check(m, z).equal());
    CHECK_THROWS_AS(lemma7_check(3, ExactRational(0)), std::domain_error);
    CHECK_THROWS_AS(lemma7_check(3, ExactRational(-1, 2)), std::domain_error);
}

TEST_CASE("lemma 9 identity") {
    CHECK(lemma9_check(3, 1).lhs == 3);
    CHECK(lemma9_check(3, 1).equal());
    CHECK(lemma9_check(5, 2).rhs == 5);
    for (Order m = 1; m <= 100; ++m)
        for (Order k = 1; k <= m; ++k)
            REQUIRE(lemma9_check(m, k).equal());
    CHECK_THROWS_AS(lemma9_check(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(lemma9_check(3, 0), std::invalid_argument);
}

TEST_CASE("lemma 10 identity") {
    CHECK(lemma10_check(3, 1).lhs == 1);
    CHECK(lemma10_check(4, 2).lhs == 3);
    CHECK(lemma10_check(4, 2).rhs == 3);
    for (Order j = 1; j <= 100; ++j)
        for (Order n = 1; n <= j; ++n)
            REQUIRE(lemma10_check(j, n).equal());
    CHECK_THROWS_AS(lemma10_check(3, 4), std::invalid_argument);
}

TEST_CASE("uniform bound") {
    CHECK(harmonic_number(3) == ExactRational(11, 6));
    CHECK(uniform_bound(ExactRational(1), 1) == 1);
    CHECK(uniform_bound(ExactRational(1), 3) == ExactRational(6, 11));
    CHECK(uniform_bound(ExactRational(2), 10) >= g_m(ExactRational(2), 10) / 2);
    for (const auto& z0 : kZs)
        for (Order m = 1; m <= 40; ++m)
            for (const ExactRational& step : {ExactRational(0), ExactRational(1, 3), ExactRational(5)}) {
                const ExactRational z = z0 + step;
                REQUIRE(g_m(z, m) / z <= uniform_bound(z0, m));
            }
    const BigReal real = uniform_bound(BigReal(1, 128), 3);
    CHECK(abs(real - BigReal::from_rational(ExactRational(6, 11), 128)) < pow2(-120, 64));
}
