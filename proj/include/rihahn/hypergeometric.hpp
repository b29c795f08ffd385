#pragma once

#include "rihahn/rational.hpp"

#include <span>

namespace rihahn {

/// Terminating hypergeometric sum
///
///   sum_{k=0}^{m} [prod_i (a_i)_k / prod_j (d_j)_k] z^k / k!
///
/// where m is the smallest m such that some numerator parameter equals -m
/// (a non-positive integer). Throws NonTerminating if no numerator parameter
/// forces termination and PoleInDenominator if some (d_j)_k vanishes for
/// k <= m.
Rational hyp_terminating(std::span<const Rational> numerator,
                         std::span<const Rational> denominator,
                         const Rational& z);

/// Terminating basic hypergeometric sum r phi s. Parameters are the
/// multiplicative values (so a numerator entry q^{-m} marks termination at m);
/// each term carries the standard extra factor [(-1)^k q^{k(k-1)/2}]^{1+s-r}.
/// Requires 0 < q < 1. Errors as in hyp_terminating.
Rational basic_hyp_terminating(std::span<const Rational> numerator,
                               std::span<const Rational> denominator,
                               const Rational& q,
                               const Rational& z);

/// Checks the q-Pochhammer shift identity
///
///   (z;q)_{n-k} = (z;q)_n / (q^{1-n}/z;q)_k * (-q/z)^k q^{C(k,2)-nk}
///
/// exactly, for 0 <= k <= n. Throws ZeroDivisor when z = 0 or the
/// denominator q-Pochhammer vanishes (precondition violations).
bool q_poch_shift_identity_check(const Rational& z, const Rational& q, long n, long k);

} // namespace rihahn
