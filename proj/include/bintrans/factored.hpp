#pragma once

#include <map>
#include <optional>

#include "bintrans/bignum.hpp"

namespace bintrans {

/// Positive rational held as a product of integer bases raised to exact
/// integer exponents. Bases up to 2^40 are split into primes, so values built
/// from small integers have a canonical form. Exponents such as C(m, k) stay
/// exact even when the expanded numerator would not fit in memory.
class FactoredRational {
public:
    FactoredRational() = default;

    /// Throws std::domain_error unless q > 0.
    static FactoredRational from_rational(const ExactRational& q);

    /// *this *= base^exponent. Throws std::domain_error unless base > 0.
    void multiply_power(const ExactRational& base, const ExactInt& exponent);
    FactoredRational& operator*=(const FactoredRational& other);

    /// Expanded value when numerator and denominator together need at most
    /// `max_bits` bits.
    std::optional<ExactRational> to_rational(std::size_t max_bits = 1u << 16) const;

    /// Natural log, accurate to `bits` bits of absolute precision for O(1)
    /// results whatever the exponent sizes.
    BigReal log(Bits bits) const;
    BigReal to_bigreal(Bits bits) const;

    const std::map<ExactInt, ExactInt>& exponents() const { return exponents_; }

    friend bool operator==(const FactoredRational& a, const FactoredRational& b) {
        return a.exponents_ == b.exponents_;
    }

private:
    void add_integer(const ExactInt& n, const ExactInt& exponent);
    void add_base(const ExactInt& base, const ExactInt& exponent);

    std::map<ExactInt, ExactInt> exponents_;
};

} // namespace bintrans
