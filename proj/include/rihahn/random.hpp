#pragma once

#include "rihahn/parameters.hpp"
#include "rihahn/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rihahn {

/// Deterministic source of random rationals for seeded sweeps. mt19937_64 is
/// fully specified by the standard, so a seed reproduces the same stream on
/// every platform.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(engine_);
    }

    /// Rational with numerator in [-max_num, max_num] and denominator in
    /// [1, max_den].
    Rational rational(long max_num = 12, long max_den = 8) {
        return make_rational(integer(-max_num, max_num), integer(1, max_den));
    }

    Rational nonzero_rational(long max_num = 12, long max_den = 8) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

    std::vector<Rational> grid_function(long N, long max_num = 9, long max_den = 6) {
        std::vector<Rational> values;
        values.reserve(N + 1);
        for (long x = 0; x <= N; ++x) {
            values.push_back(rational(max_num, max_den));
        }
        return values;
    }

    /// Rejection-samples a valid ParameterSet with 1 <= N <= max_N.
    ParameterSet parameter_set(long max_N) {
        for (;;) {
            ParameterSet p{rational(10, 7), rational(10, 7), integer(1, max_N)};
            if (p.valid()) return p;
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace rihahn
