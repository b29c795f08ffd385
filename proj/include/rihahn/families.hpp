#pragma once

#include "rihahn/parameters.hpp"
#include "rihahn/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rihahn {

/// P_n(x; alpha, beta, N) = 3F2(-n, -x, alpha+1; -N, 1-beta-n; 1).
/// x may be any rational; the -n parameter terminates the sum at k = n.
Rational P(long n, const Rational& x, const ParameterSet& p);

/// V_n(x; alpha, beta, N) = 3F2(-n, -x, -alpha-N; -N, 1+beta-x; 1) on the
/// grid x = 0..N.
Rational V(long n, long x, const ParameterSet& p);

/// Classical Hahn polynomial H_n(x; xi, eta, N)
/// = 3F2(-n, -x, n+xi+eta+1; -N, xi+1; 1).
Rational hahn(long n, const Rational& x, const HahnParameterSet& hp);

/// Monic rescaling factor mu_n = (-N)_n (1-beta-n)_n / (alpha+1)_n.
Rational monic_mu(long n, const ParameterSet& p);

/// p_n(x) = mu_n P_n(x); leading coefficient exactly 1.
Rational monic_p(long n, const Rational& x, const ParameterSet& p);

/// Continuous Askey polynomial 2F1(-n, alpha+1; 1-beta-n; x), the N -> inf
/// limit of P_n(Nx).
Rational askey_P(long n, const Rational& x, const Rational& alpha, const Rational& beta);

/// Coefficients u_0..u_n with f(x) = sum_k u_k / (1+beta-x)_k on the grid,
/// by exact elimination on the samples x = 0..n. f must have "denominator
/// degree" at most n for the reconstruction to extend to the whole grid.
std::vector<Rational> expand_in_rational_monomials(const std::vector<Rational>& f,
                                                   long n,
                                                   const ParameterSet& p);

/// The expansion above applied to V_n.
std::vector<Rational> expand_V_in_rational_monomials(long n, const ParameterSet& p);

/// Values of one family on the grid: entry (n, x) = member n at grid point x.
struct FamilyTable {
    std::string family;
    std::vector<std::vector<Rational>> values;

    /// CSV: header row of x-values, then one row per n.
    void write_csv(std::ostream& out) const;
};

enum class Family { P, V, Hahn, Monic };

FamilyTable tabulate(Family which, const ParameterSet& p);
FamilyTable tabulate_hahn(const HahnParameterSet& hp);

} // namespace rihahn
