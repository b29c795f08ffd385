#pragma once

#include "rihahn/rational.hpp"

#include <string>

namespace rihahn {

/// Parameters (alpha, beta, N) of the R_I family on the grid x = 0..N.
///
/// The validity predicate is the union of the pole exclusions needed anywhere
/// in the library (basis denominators, weights, normalization constants,
/// recurrence divisors), so a valid set never fails part-way through a
/// computation:
///   - beta is not an integer in [-N, N-1]
///   - alpha is not an integer in [-N-1, -1]
///   - alpha+beta is not an integer in [-N, -1]
struct ParameterSet {
    Rational alpha;
    Rational beta;
    long N = 0;

    bool valid() const { return violation().empty(); }

    /// Empty when valid; otherwise names the violated pole condition.
    std::string violation() const;

    /// Throws InvalidParameters carrying violation() when invalid.
    void validate() const;
};

/// Parameters (xi, eta, N) of the classical Hahn family. Validity excludes
/// the vanishing denominator Pochhammers of the weight and norm over the
/// full index range x, n = 0..N:
///   - xi is not an integer in [-N, -1]   ((xi+1)_n)
///   - eta is not an integer in [-N, -1]  ((-eta-N)_x)
struct HahnParameterSet {
    Rational xi;
    Rational eta;
    long N = 0;

    bool valid() const { return violation().empty(); }
    std::string violation() const;
    void validate() const;
};

} // namespace rihahn
