#pragma once

// Arbitrary-precision substrate: exact integers and rationals (GMP) and
// precision-tagged binary floating point (MPFR).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace bintrans {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// Precision in bits of a BigReal mantissa.
using Bits = long;

/// Summation index / transform order.
using Order = unsigned long;

/// Binary floating value carrying its own precision. All rounding is to
/// nearest; binary operations produce a result at the larger of the two
/// operand precisions.
class BigReal {
public:
    explicit BigReal(Bits precision = 53);
    BigReal(long value, Bits precision);
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    static BigReal from_integer(const ExactInt& value, Bits precision);
    static BigReal from_rational(const ExactRational& value, Bits precision);
    /// Parses a decimal literal ("0.125", "-3", "1e-5"). Throws
    /// std::invalid_argument on malformed input.
    static BigReal from_string(std::string_view decimal, Bits precision);

    Bits precision() const { return static_cast<Bits>(mpfr_get_prec(value_)); }
    BigReal rounded(Bits precision) const;

    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// Decimal rendering with `significant_digits` digits. The last digit is
    /// rounded from 8 extra guard digits, so the text is stable across the
    /// binary precision of the value once that precision is sufficient.
    std::string to_decimal(int significant_digits) const;

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    BigReal& operator+=(const BigReal& rhs);
    BigReal& operator-=(const BigReal& rhs);
    BigReal& operator*=(const BigReal& rhs);
    BigReal& operator/=(const BigReal& rhs);

    BigReal operator-() const;

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);

    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator*(const BigReal& a, const ExactInt& b);
    friend BigReal operator*(const BigReal& a, const ExactRational& b);

    friend bool operator==(const BigReal& a, const BigReal& b);
    friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
    friend bool operator==(const BigReal& a, long b);
    friend std::partial_ordering operator<=>(const BigReal& a, long b);

private:
    mpfr_t value_;
};

BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
/// 2^exponent at the given precision.
BigReal pow2(long exponent, Bits precision);

/// True when the two values differ in neither precision nor bits.
bool bit_identical(const BigReal& a, const BigReal& b);

/// Working-precision rule for alternating binomial sums of order m.
/// The terms of such a sum total roughly 2^m in magnitude while the result
/// is O(1), so m bits are added on top of the target and the guard bits.
class PrecisionPolicy {
public:
    explicit PrecisionPolicy(Bits target_bits, Bits guard_bits = 64);

    Bits target_bits() const { return target_bits_; }
    Bits guard_bits() const { return guard_bits_; }
    Bits working_bits(Order m) const;

private:
    Bits target_bits_;
    Bits guard_bits_;
};

Bits working_precision(const PrecisionPolicy& policy, Order m);

/// Exact binomial coefficient; zero when k < 0 or k > m.
ExactInt binomial(long m, long k);
ExactInt factorial(Order n);
/// n!! with 0!! = 1!! = 1.
ExactInt double_factorial(Order k);

/// Parses "p/q", an integer, or a decimal literal with optional exponent
/// into an exact rational. Throws std::invalid_argument on malformed input
/// or a zero denominator.
ExactRational parse_rational(std::string_view text);

/// Always "p/q", including q = 1.
std::string format_fraction(const ExactRational& q);

/// Number of bits needed to write numerator and denominator.
std::size_t rational_size_bits(const ExactRational& q);

} // namespace bintrans
