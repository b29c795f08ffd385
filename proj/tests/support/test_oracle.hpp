#pragma once

// Test-only reference implementations, kept deliberately independent of the
// library path: every series term is assembled from scratch as a quotient of
// full Pochhammer products (no incremental term ratios), and the truncation
// index is supplied explicitly by the caller.

#include "rihahn/parameters.hpp"
#include "rihahn/rational.hpp"

#include <vector>

namespace test_oracle {

using rihahn::ParameterSet;
using rihahn::Rational;

inline Rational poch(const Rational& a, long n) {
    Rational product(1);
    for (long i = 0; i < n; ++i) product *= a + i;
    return product;
}

inline Rational fact(long n) { return poch(Rational(1), n); }

/// sum_{k=0}^{kmax} prod_i (num_i)_k / [prod_j (den_j)_k k!] z^k, each term
/// from scratch.
inline Rational hyp(const std::vector<Rational>& num, const std::vector<Rational>& den,
                    const Rational& z, long kmax) {
    Rational total(0);
    for (long k = 0; k <= kmax; ++k) {
        Rational term(1);
        for (const Rational& a : num) term *= poch(a, k);
        for (const Rational& d : den) term /= poch(d, k);
        term /= fact(k);
        Rational zk(1);
        for (long i = 0; i < k; ++i) zk *= z;
        total += term * zk;
    }
    return total;
}

inline Rational P(long n, const Rational& x, const ParameterSet& p) {
    return hyp({Rational(-n), -x, p.alpha + 1}, {Rational(-p.N), 1 - p.beta - n},
               Rational(1), n);
}

inline Rational V(long n, long x, const ParameterSet& p) {
    const long kmax = std::min(n, x);
    return hyp({Rational(-n), Rational(-x), -p.alpha - p.N},
               {Rational(-p.N), 1 + p.beta - x}, Rational(1), kmax);
}

inline Rational weight(long x, const ParameterSet& p) {
    return poch(-p.alpha - p.beta - p.N, p.N) / poch(-p.alpha - p.N, p.N) *
           poch(Rational(-p.N), x) * poch(-p.beta, x) /
           (fact(x) * poch(-p.alpha - p.beta - p.N, x));
}

/// Weighted sum over the grid of f(x) g(x), with both rows supplied.
inline Rational gram_entry(const std::vector<Rational>& f, const std::vector<Rational>& g,
                           const ParameterSet& p) {
    Rational sum(0);
    for (long x = 0; x <= p.N; ++x) sum += weight(x, p) * f[x] * g[x];
    return sum;
}

} // namespace test_oracle
