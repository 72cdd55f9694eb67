#include "bintrans/reference.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace bintrans {

namespace {

std::mutex bernoulli_mutex;
std::vector<ExactRational> bernoulli_cache;

// Tangent numbers T_1..T_n (T_k = tan^{(2k-1)}(0)), Brent-Harvey in-place
// recurrence.
std::vector<ExactInt> tangent_numbers(std::size_t n) {
    std::vector<ExactInt> t(n + 1);
    if (n == 0)
        return t;
    t[1] = 1;
    for (std::size_t k = 2; k <= n; ++k)
        t[k] = ExactInt(t[k - 1] * static_cast<unsigned long>(k - 1));
    for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t j = k; j <= n; ++j)
            t[j] = ExactInt(t[j - 1] * static_cast<unsigned long>(j - k) +
                            t[j] * static_cast<unsigned long>(j - k + 2));
    return t;
}

} // namespace

std::vector<ExactRational> bernoulli_even(std::size_t count) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_cache.size() < count) {
        // Recompute with headroom so repeated growth stays cheap.
        const std::size_t n = std::max(count, bernoulli_cache.size() * 2);
        const auto t = tangent_numbers(n);
        bernoulli_cache.clear();
        bernoulli_cache.reserve(n);
        for (std::size_t k = 1; k <= n; ++k) {
            // B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))
            ExactInt four_k;
            mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
            ExactRational b(ExactInt(t[k] * static_cast<unsigned long>(2 * k)), ExactInt(four_k * (four_k - 1)));
            b.canonicalize();
            if (k % 2 == 0)
                b = -b;
            bernoulli_cache.push_back(b);
        }
    }
    return {bernoulli_cache.begin(), bernoulli_cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

BoundedValue gamma_euler_maclaurin(Bits bits, Order n) {
    if (n < 2)
        throw std::invalid_argument("gamma_euler_maclaurin: n must be >= 2");
    const Bits wp = bits + 32 + static_cast<Bits>(mpz_sizeinbase(ExactInt(n).get_mpz_t(), 2));
    const BigReal target = pow2(-(bits + 16), 64);

    BigReal harmonic(wp);
    for (Order i = 1; i <= n; ++i)
        harmonic += BigReal(1, wp) / static_cast<long>(i);

    const BigReal nn = BigReal::from_integer(ExactInt(n), wp);
    BigReal value = harmonic - log(nn) - BigReal(1, wp) / (nn * 2L);

    const BigReal inv_n2 = BigReal(1, wp) / (nn * nn);
    BigReal power = inv_n2; // n^-2j
    std::size_t batch = 16;
    std::vector<ExactRational> bern = bernoulli_even(batch);
    for (std::size_t j = 1;; ++j) {
        if (j > bern.size()) {
            batch *= 2;
            bern = bernoulli_even(batch);
        }
        // B_2j / (2j n^2j)
        BigReal term = power * bern[j - 1] / static_cast<long>(2 * j);
        if (abs(term) < target) {
            // Corrections for f(x) = 1/x alternate and the remainder is
            // dominated by the first omitted one.
            return {value.rounded(bits + 16), abs(term).rounded(64)};
        }
        if (j > 4 * n)
            throw std::runtime_error("gamma_euler_maclaurin: n too small for requested precision");
        value += term;
        power *= inv_n2;
    }
}

namespace {

std::mutex gamma_mutex;
std::map<Bits, BigReal> gamma_cache;

} // namespace

BigReal gamma_reference(Bits bits) {
    if (bits < 16)
        throw std::invalid_argument("gamma_reference: bits must be >= 16");
    {
        std::lock_guard<std::mutex> lock(gamma_mutex);
        if (auto it = gamma_cache.find(bits); it != gamma_cache.end())
            return it->second;
    }
    const auto em = gamma_euler_maclaurin(bits + 32, static_cast<Order>(2 * bits));
    BigReal result = em.value.rounded(bits);
    std::lock_guard<std::mutex> lock(gamma_mutex);
    gamma_cache.emplace(bits, result);
    return result;
}

namespace {

// atan(1/x) by its alternating Taylor series. Returns the truncation bound
// (first omitted term) alongside the value.
BoundedValue arctan_inverse(long x, Bits wp) {
    const BigReal stop = pow2(-wp, 64);
    const long x2 = x * x;
    BigReal power = BigReal(1, wp) / x; // x^-(2k+1)
    BigReal sum(wp);
    for (long k = 0;; ++k) {
        BigReal term = power / (2 * k + 1);
        if (term < stop)
            return {sum, term.rounded(64)};
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
        power = power / x2;
    }
}

BoundedValue combine_atans(Bits bits, std::initializer_list<std::pair<long, long>> terms) {
    const Bits wp = bits + 32;
    BigReal value(wp);
    BigReal bound(64);
    for (const auto& [coefficient, x] : terms) {
        auto a = arctan_inverse(x, wp);
        value += a.value * coefficient;
        bound += a.truncation_bound * (coefficient < 0 ? -coefficient : coefficient);
    }
    return {value, bound};
}

} // namespace

BoundedValue pi_machin(Bits bits) { return combine_atans(bits, {{16, 5}, {-4, 239}}); }

BoundedValue pi_gauss(Bits bits) { return combine_atans(bits, {{48, 18}, {32, 57}, {-20, 239}}); }

BigReal pi_reference(Bits bits) {
    if (bits < 16)
        throw std::invalid_argument("pi_reference: bits must be >= 16");
    return pi_machin(bits + 16).value.rounded(bits);
}

BigReal ln_pi_half_reference(Bits bits) {
    if (bits < 16)
        throw std::invalid_argument("ln_pi_half_reference: bits must be >= 16");
    const BigReal pi = pi_machin(bits + 32).value;
    return log(pi / 2L).rounded(bits);
}

} // namespace bintrans
