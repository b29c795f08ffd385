#include "rihahn/parameters.hpp"

#include "rihahn/errors.hpp"

namespace rihahn {

std::string ParameterSet::violation() const {
    if (N < 0) {
        return "N must be a non-negative integer";
    }
    if (is_integer_in(beta, -N, N - 1)) {
        return "beta = " + to_string(beta) + " is an integer in [" +
               std::to_string(-N) + ", " + std::to_string(N - 1) + "]";
    }
    if (is_integer_in(alpha, -N - 1, -1)) {
        return "alpha = " + to_string(alpha) + " is an integer in [" +
               std::to_string(-N - 1) + ", -1]";
    }
    if (is_integer_in(alpha + beta, -N, -1)) {
        return "alpha+beta = " + to_string(Rational(alpha + beta)) +
               " is an integer in [" + std::to_string(-N) + ", -1]";
    }
    return {};
}

void ParameterSet::validate() const {
    const std::string why = violation();
    if (!why.empty()) {
        throw InvalidParameters(why);
    }
}

std::string HahnParameterSet::violation() const {
    if (N < 0) {
        return "N must be a non-negative integer";
    }
    if (is_integer_in(xi, -N, -1)) {
        return "xi = " + to_string(xi) + " is an integer in [" +
               std::to_string(-N) + ", -1]";
    }
    if (is_integer_in(eta, -N, -1)) {
        return "eta = " + to_string(eta) + " is an integer in [" +
               std::to_string(-N) + ", -1]";
    }
    return {};
}

void HahnParameterSet::validate() const {
    const std::string why = violation();
    if (!why.empty()) {
        throw InvalidParameters(why);
    }
}

} // namespace rihahn
