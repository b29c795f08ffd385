#pragma once

#include "rihahn/parameters.hpp"
#include "rihahn/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace rihahn {

/// Values of a rational function on the grid x = 0..N (length N+1).
using GridFunction = std::vector<Rational>;

/// Difference operator  A+ T^+ + A- T^- + A0 I  on the grid x = 0..N.
///
/// Boundary safety invariant: coeff_plus(N) = 0 and coeff_minus(0) = 0, so a
/// shifted value outside the grid is only ever multiplied by zero. Application
/// checks the coefficient first and never reads out of range.
struct DifferenceOperator {
    std::function<Rational(long)> coeff_plus;
    std::function<Rational(long)> coeff_minus;
    std::function<Rational(long)> coeff_id;
    long N = 0;
};

DifferenceOperator make_L(const ParameterSet& p);
DifferenceOperator make_M(const ParameterSet& p);
DifferenceOperator make_Y(const ParameterSet& p);
DifferenceOperator make_adjoint_L(const ParameterSet& p);
DifferenceOperator make_adjoint_M(const ParameterSet& p);

/// g(x) = A+(x) f(x+1) + A-(x) f(x-1) + A0(x) f(x). Throws BoundaryLeak if a
/// nonzero coefficient addresses x = -1 or x = N+1.
GridFunction apply_operator(const DifferenceOperator& op, const GridFunction& f);

/// Verifies (f, op g) = (op_star f, g) under the weighted scalar product for
/// `trials` seeded random grid-function pairs; exact equality on every pair.
bool adjoint_check(const DifferenceOperator& op,
                   const DifferenceOperator& op_star,
                   const ParameterSet& p,
                   int trials,
                   std::uint64_t seed);

} // namespace rihahn
