#pragma once

// Reference constants computed by methods that share nothing with the
// binomial-transform formulas they are used to check.

#include <vector>

#include "bintrans/bignum.hpp"

namespace bintrans {

/// Even-index Bernoulli numbers B_2, B_4, ..., B_{2 count}, exact.
/// Generated from tangent numbers with integer arithmetic only.
std::vector<ExactRational> bernoulli_even(std::size_t count);

/// An approximation together with a rigorous bound on its truncation error.
struct BoundedValue {
    BigReal value;
    BigReal truncation_bound;
};

/// Euler's constant from the Euler-Maclaurin expansion of the harmonic
/// numbers at a fixed n:
///   gamma = H_n - ln n - 1/(2n) + sum_j B_2j / (2j n^2j) + R,
/// with |R| below the first omitted correction term. The number of
/// correction terms is the smallest that pushes the bound below 2^-(bits+16).
BoundedValue gamma_euler_maclaurin(Bits bits, Order n);

/// Euler's constant rounded to `bits` bits. Requires bits >= 16.
BigReal gamma_reference(Bits bits);

/// pi from Machin's formula 16 atan(1/5) - 4 atan(1/239).
BoundedValue pi_machin(Bits bits);
/// pi from Gauss's formula 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239).
BoundedValue pi_gauss(Bits bits);

BigReal pi_reference(Bits bits);
/// ln(pi/2) rounded to `bits` bits. Requires bits >= 16.
BigReal ln_pi_half_reference(Bits bits);

} // namespace bintrans
