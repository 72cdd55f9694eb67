#include "bintrans/factored.hpp"

#include <cmath>
#include <stdexcept>

namespace bintrans {

FactoredRational FactoredRational::from_rational(const ExactRational& q) {
    FactoredRational r;
    r.multiply_power(q, 1);
    return r;
}

void FactoredRational::multiply_power(const ExactRational& base, const ExactInt& exponent) {
    if (base <= 0)
        throw std::domain_error("FactoredRational: base must be > 0");
    if (exponent == 0)
        return;
    add_integer(base.get_num(), exponent);
    add_integer(base.get_den(), ExactInt(-exponent));
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& other) {
    for (const auto& [b, e] : other.exponents_)
        add_base(b, e);
    return *this;
}

void FactoredRational::add_base(const ExactInt& base, const ExactInt& exponent) {
    auto [it, inserted] = exponents_.try_emplace(base, 0);
    it->second += exponent;
    if (it->second == 0)
        exponents_.erase(it);
}

void FactoredRational::add_integer(const ExactInt& n, const ExactInt& exponent) {
    if (n == 1)
        return;
    const bool small = mpz_sizeinbase(n.get_mpz_t(), 2) <= 40;
    if (!small) {
        add_base(n, exponent);
        return;
    }
    unsigned long rest = n.get_ui();
    for (unsigned long d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
        unsigned long count = 0;
        while (rest % d == 0) {
            rest /= d;
            ++count;
        }
        if (count > 0)
            add_base(ExactInt(d), ExactInt(exponent * count));
    }
    if (rest > 1)
        add_base(ExactInt(rest), exponent);
}

std::optional<ExactRational> FactoredRational::to_rational(std::size_t max_bits) const {
    double estimate = 0.0;
    for (const auto& [b, e] : exponents_) {
        if (!e.fits_slong_p())
            return std::nullopt;
        estimate += static_cast<double>(mpz_sizeinbase(b.get_mpz_t(), 2)) * std::abs(e.get_d());
        if (estimate > static_cast<double>(max_bits))
            return std::nullopt;
    }
    ExactInt num = 1;
    ExactInt den = 1;
    for (const auto& [b, e] : exponents_) {
        ExactInt p;
        const long ex = e.get_si();
        mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(ex < 0 ? -ex : ex));
        if (ex > 0)
            num *= p;
        else
            den *= p;
    }
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

BigReal FactoredRational::log(Bits bits) const {
    // sum e * ln(b) with |e| up to ~2^m: carry the exponent size and the
    // number of terms as extra bits so the cancelled O(1) result keeps `bits`.
    std::size_t exponent_bits = 1;
    for (const auto& [b, e] : exponents_)
        exponent_bits = std::max(exponent_bits, mpz_sizeinbase(e.get_mpz_t(), 2) +
                                                    mpz_sizeinbase(b.get_mpz_t(), 2));
    const Bits wp = bits + static_cast<Bits>(exponent_bits) +
                    static_cast<Bits>(mpz_sizeinbase(ExactInt(exponents_.size() + 1).get_mpz_t(), 2)) + 16;
    BigReal sum(wp);
    for (const auto& [b, e] : exponents_)
        sum += bintrans::log(BigReal::from_integer(b, wp)) * e;
    return sum.rounded(bits);
}

BigReal FactoredRational::to_bigreal(Bits bits) const { return exp(log(bits + 16)).rounded(bits); }

} // namespace bintrans
