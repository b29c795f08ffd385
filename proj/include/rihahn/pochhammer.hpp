#pragma once

#include "rihahn/rational.hpp"

namespace rihahn {

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1. Requires n >= 0.
Rational pochhammer(const Rational& a, long n);

/// Rising factorial extended to negative orders by (a)_{-m} = 1/(a-m)_m.
/// Throws ZeroDivisor when the reciprocal product vanishes.
Rational pochhammer_signed(const Rational& a, long n);

/// n! as a Rational.
Rational factorial(long n);

/// q-shifted factorial (a;q)_n = prod_{i=0}^{n-1} (1 - a q^i), (a;q)_0 = 1.
Rational q_pochhammer(const Rational& a, const Rational& q, long n);

} // namespace rihahn
