#pragma once

#include "rihahn/parameters.hpp"
#include "rihahn/rational.hpp"
#include "rihahn/report.hpp"

#include <span>

namespace rihahn {

/// Coefficients of the R_I recurrence machinery at degree n: the monic form
/// (gamma_n, delta_n, epsilon_n) and the Y-action form (A_n, B_n). A_N = 0
/// (the family truncates) and epsilon_n = n+beta-1.
struct RecurrenceCoefficients {
    Rational gamma;
    Rational delta;
    Rational epsilon;
    Rational A;
    Rational B;
};

RecurrenceCoefficients recurrence_coefficients(long n, const ParameterSet& p);

/// apply(Y, P_n) = A_n P_{n+1} - (A_n+B_n) P_n + B_n P_{n-1} on the grid for
/// n = 0..N (A_N = 0 closes the top), and
/// apply(L, P_n) = -(n+alpha+1) P_n - n(alpha+beta+n)/(1-beta-n) P_{n-1}.
IdentityReport verify_Y_action(const ParameterSet& p);

/// Three-term recurrence in non-monic form, checked at every grid point for
/// n = 0..N and additionally at off-grid rational points for n <= N-1 (at
/// n = N the identity lives on the grid only, where (-x)_{N+1} vanishes).
IdentityReport verify_recurrence_nonmonic(const ParameterSet& p);

/// Monic R_I recurrence p_{n+1} + (gamma_n - x) p_n + delta_n (x - eps_n)
/// p_{n-1} = 0 for n = 1..N-1, verified at N+2 distinct rational points
/// (degree bound makes that a polynomial identity).
IdentityReport verify_recurrence_monic(const ParameterSet& p);

/// Difference equation A(x)P_n(x+1) + B(x)P_n(x-1) + C(x)P_n(x)
/// = n[(N-x)P_n(x+1) + (x-N-alpha-1)P_n(x)] over the grid, boundary terms
/// guarded by the vanishing coefficients.
IdentityReport verify_difference_equation(const ParameterSet& p);

/// The four parameter-shift displays: L, M, Y map P_n(.; alpha, beta) to
/// multiples of P_n(.; alpha+1, beta-1), plus the contiguity expansion back
/// onto the unshifted family. Requires both parameter sets valid.
IdentityReport verify_parameter_shift(const ParameterSet& p);

/// Recurrence of the continuous Askey polynomials at the given sample points,
/// for n = 1..n_max.
IdentityReport verify_askey_recurrence(const Rational& alpha,
                                       const Rational& beta,
                                       long n_max,
                                       std::span<const Rational> x_samples);

} // namespace rihahn
