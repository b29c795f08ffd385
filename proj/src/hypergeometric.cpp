#include "rihahn/hypergeometric.hpp"

#include "rihahn/errors.hpp"
#include "rihahn/pochhammer.hpp"

#include <optional>

namespace rihahn {

namespace {

std::optional<long> termination_index(std::span<const Rational> numerator) {
    std::optional<long> m;
    for (const Rational& a : numerator) {
        if (is_integer(a) && a <= 0 && a.get_num().fits_slong_p()) {
            const long candidate = -a.get_num().get_si();
            if (!m || candidate < *m) m = candidate;
        }
    }
    return m;
}

// Smallest m >= 0 with a * q^m == 1, if any. q in (0,1) makes a*q^m strictly
// decreasing, so the scan stops as soon as it drops below 1.
std::optional<long> q_termination_index(const Rational& a, const Rational& q) {
    Rational t = a;
    long m = 0;
    while (t > 1) {
        t *= q;
        ++m;
    }
    if (t == 1) return m;
    return std::nullopt;
}

} // namespace

Rational hyp_terminating(std::span<const Rational> numerator,
                         std::span<const Rational> denominator,
                         const Rational& z) {
    const auto m = termination_index(numerator);
    if (!m) {
        throw NonTerminating("no non-positive-integer numerator parameter");
    }
    Rational total(0);
    Rational term(1);
    for (long k = 0; k <= *m; ++k) {
        total += term;
        if (k == *m) break;
        for (const Rational& a : numerator) term *= a + k;
        for (const Rational& d : denominator) {
            const Rational factor = d + k;
            if (factor == 0) {
                throw PoleInDenominator("denominator Pochhammer vanishes at k = " +
                                        std::to_string(k + 1));
            }
            term /= factor;
        }
        term *= z;
        term /= k + 1;
    }
    return total;
}

Rational basic_hyp_terminating(std::span<const Rational> numerator,
                               std::span<const Rational> denominator,
                               const Rational& q,
                               const Rational& z) {
    if (!(q > 0 && q < 1)) {
        throw InvalidParameters("basic series requires 0 < q < 1");
    }
    std::optional<long> m;
    for (const Rational& a : numerator) {
        if (const auto candidate = q_termination_index(a, q)) {
            if (!m || *candidate < *m) m = candidate;
        }
    }
    if (!m) {
        throw NonTerminating("no numerator parameter of the form q^{-m}");
    }
    // 1+s-r exponent of the extra factor per term.
    const long extra = 1 + static_cast<long>(denominator.size()) -
                       static_cast<long>(numerator.size());
    Rational total(0);
    Rational term(1);
    Rational q_pow_k(1); // q^k
    for (long k = 0; k <= *m; ++k) {
        total += term;
        if (k == *m) break;
        for (const Rational& a : numerator) term *= 1 - a * q_pow_k;
        for (const Rational& d : denominator) {
            const Rational factor = 1 - d * q_pow_k;
            if (factor == 0) {
                throw PoleInDenominator("denominator q-Pochhammer vanishes at k = " +
                                        std::to_string(k + 1));
            }
            term /= factor;
        }
        term /= 1 - q * q_pow_k; // the (q;q)_k factor
        term *= z;
        term *= pow_int(-q_pow_k, extra);
        q_pow_k *= q;
    }
    return total;
}

bool q_poch_shift_identity_check(const Rational& z, const Rational& q, long n, long k) {
    if (z == 0) {
        throw ZeroDivisor("shift identity requires z != 0");
    }
    if (k < 0 || k > n) {
        throw InvalidParameters("shift identity requires 0 <= k <= n");
    }
    const Rational lhs = q_pochhammer(z, q, n - k);
    const Rational denom = q_pochhammer(pow_int(q, 1 - n) / z, q, k);
    if (denom == 0) {
        throw ZeroDivisor("(q^{1-n}/z;q)_k vanishes");
    }
    const Rational rhs = q_pochhammer(z, q, n) / denom * pow_int(-q / z, k) *
                         pow_int(q, k * (k - 1) / 2 - n * k);
    return lhs == rhs;
}

} // namespace rihahn
