#include "rihahn/pochhammer.hpp"

#include "rihahn/errors.hpp"

#include <cassert>

namespace rihahn {

Rational pochhammer(const Rational& a, long n) {
    assert(n >= 0);
    Rational result(1);
    Rational factor = a;
    for (long i = 0; i < n; ++i) {
        result *= factor;
        factor += 1;
    }
    return result;
}

Rational pochhammer_signed(const Rational& a, long n) {
    if (n >= 0) {
        return pochhammer(a, n);
    }
    const Rational reciprocal = pochhammer(a + n, -n);
    if (reciprocal == 0) {
        throw ZeroDivisor("(a)_n with negative n hits a zero factor");
    }
    return 1 / reciprocal;
}

Rational factorial(long n) {
    return pochhammer(Rational(1), n);
}

Rational q_pochhammer(const Rational& a, const Rational& q, long n) {
    assert(n >= 0);
    Rational result(1);
    Rational power(1);
    for (long i = 0; i < n; ++i) {
        result *= 1 - a * power;
        power *= q;
    }
    return result;
}

} // namespace rihahn
