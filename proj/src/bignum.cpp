#include "bintrans/bignum.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <stdexcept>
#include <utility>

namespace bintrans {

BigReal::BigReal(Bits precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Bits precision) {
    mpfr_init2(value_, precision);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::from_integer(const ExactInt& value, Bits precision) {
    BigReal r(precision);
    mpfr_set_z(r.value_, value.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_rational(const ExactRational& value, Bits precision) {
    BigReal r(precision);
    mpfr_set_q(r.value_, value.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_string(std::string_view decimal, Bits precision) {
    const std::string text(decimal);
    if (text.empty() || std::isspace(static_cast<unsigned char>(text.front())))
        throw std::invalid_argument("malformed decimal literal '" + text + "'");
    BigReal r(precision);
    if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("malformed decimal literal '" + text + "'");
    return r;
}

BigReal BigReal::rounded(Bits precision) const {
    BigReal r(precision);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

namespace {

struct MpfrStringDeleter {
    void operator()(char* p) const { mpfr_free_str(p); }
};

// Rounds a digit string in place to `keep` digits (half-up on the dropped
// part). Returns true when the carry overflowed into a new leading digit.
bool round_digits(std::string& digits, std::size_t keep) {
    const bool up = digits.size() > keep && digits[keep] >= '5';
    digits.resize(keep);
    if (!up)
        return false;
    for (std::size_t i = keep; i-- > 0;) {
        if (digits[i] == '9') {
            digits[i] = '0';
        } else {
            ++digits[i];
            return false;
        }
    }
    digits.insert(digits.begin(), '1');
    digits.resize(keep);
    return true;
}

} // namespace

std::string BigReal::to_decimal(int significant_digits) const {
    if (significant_digits < 1)
        throw std::invalid_argument("significant_digits must be >= 1");
    if (mpfr_nan_p(value_))
        return "nan";
    if (mpfr_inf_p(value_))
        return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(value_))
        return "0";

    const auto requested = static_cast<std::size_t>(significant_digits);
    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, MpfrStringDeleter> raw(
        mpfr_get_str(nullptr, &exp10, 10, requested + 8, value_, MPFR_RNDN));
    std::string digits(raw.get());
    const bool negative = !digits.empty() && digits.front() == '-';
    if (negative)
        digits.erase(digits.begin());
    if (round_digits(digits, requested))
        ++exp10;

    // value = 0.DIGITS x 10^exp10; scientific exponent is exp10 - 1.
    const long sci = static_cast<long>(exp10) - 1;
    std::string out = negative ? "-" : "";
    if (sci >= -5 && sci < significant_digits) {
        if (sci >= 0) {
            out += digits.substr(0, static_cast<std::size_t>(sci) + 1);
            if (digits.size() > static_cast<std::size_t>(sci) + 1)
                out += "." + digits.substr(static_cast<std::size_t>(sci) + 1);
        } else {
            out += "0." + std::string(static_cast<std::size_t>(-sci - 1), '0') + digits;
        }
    } else {
        out += digits.substr(0, 1);
        if (digits.size() > 1)
            out += "." + digits.substr(1);
        out += "e" + std::to_string(sci);
    }
    return out;
}

namespace {

Bits max_prec(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }

} // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(max_prec(a, b));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(max_prec(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(max_prec(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(max_prec(a, b));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const ExactInt& b) {
    BigReal r(a.precision());
    mpfr_mul_z(r.value_, a.value_, b.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const ExactRational& b) {
    BigReal r(a.precision());
    mpfr_mul_q(r.value_, a.value_, b.get_mpq_t(), MPFR_RNDN);
    return r;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_unordered_p(a.value_, b.value_))
        return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0 && !mpfr_nan_p(a.value_); }

std::partial_ordering operator<=>(const BigReal& a, long b) {
    if (mpfr_nan_p(a.value_))
        return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(a.value_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal log(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal exp(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal abs(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal sqrt(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal pow2(long exponent, Bits precision) {
    BigReal r(precision);
    mpfr_set_ui_2exp(r.get(), 1, exponent, MPFR_RNDN);
    return r;
}

bool bit_identical(const BigReal& a, const BigReal& b) {
    if (a.precision() != b.precision())
        return false;
    if (mpfr_nan_p(a.get()) || mpfr_nan_p(b.get()))
        return mpfr_nan_p(a.get()) && mpfr_nan_p(b.get());
    return mpfr_equal_p(a.get(), b.get()) != 0 && mpfr_signbit(a.get()) == mpfr_signbit(b.get());
}

PrecisionPolicy::PrecisionPolicy(Bits target_bits, Bits guard_bits)
    : target_bits_(target_bits), guard_bits_(guard_bits) {
    if (target_bits < 1)
        throw std::invalid_argument("target_bits must be positive");
    if (guard_bits < 1)
        throw std::invalid_argument("guard_bits must be positive");
}

Bits PrecisionPolicy::working_bits(Order m) const {
    return target_bits_ + static_cast<Bits>(m) + guard_bits_;
}

Bits working_precision(const PrecisionPolicy& policy, Order m) { return policy.working_bits(m); }

ExactInt binomial(long m, long k) {
    if (m < 0)
        throw std::invalid_argument("binomial: m must be >= 0");
    if (k < 0 || k > m)
        return 0;
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return r;
}

ExactInt factorial(Order n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

ExactInt double_factorial(Order k) {
    ExactInt r;
    mpz_2fac_ui(r.get_mpz_t(), k);
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

ExactInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    ExactInt v(std::string(s), 10);
    return negative ? ExactInt(-v) : v;
}

} // namespace

ExactRational parse_rational(std::string_view text) {
    const std::string original(text);
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        ExactInt num = parse_integer(text.substr(0, slash));
        ExactInt den = parse_integer(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + original + "'");
        ExactRational q(num, den);
        q.canonicalize();
        return q;
    }

    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        const ExactInt ex = parse_integer(text.substr(e + 1));
        if (!ex.fits_slong_p() || abs(ex) > 100000)
            throw std::invalid_argument("exponent out of range in '" + original + "'");
        exponent = ex.get_si();
        text = text.substr(0, e);
    }
    std::string mantissa;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw std::invalid_argument("malformed number '" + original + "'");
        mantissa = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(text))
            throw std::invalid_argument("malformed number '" + original + "'");
        mantissa = std::string(text);
    }

    ExactInt num(mantissa, 10);
    if (negative)
        num = -num;
    ExactInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    ExactRational q = exponent >= 0 ? ExactRational(num * scale) : ExactRational(num, scale);
    q.canonicalize();
    return q;
}

std::string format_fraction(const ExactRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t rational_size_bits(const ExactRational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

} // namespace bintrans
