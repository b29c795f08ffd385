#include "rihahn/rational.hpp"

#include "rihahn/errors.hpp"

#include <stdexcept>

namespace rihahn {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ZeroDivisor("rational with zero denominator");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    const auto slash = text.find('/');
    const std::string num_part(text.substr(0, slash));
    std::string den_part = slash == std::string_view::npos
                               ? std::string("1")
                               : std::string(text.substr(slash + 1));
    auto is_valid_int = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    if (!is_valid_int(num_part, true) || !is_valid_int(den_part, false)) {
        throw std::invalid_argument("malformed rational literal: expected p or p/q, got '" +
                                    std::string(text) + "'");
    }
    return make_rational(Integer(num_part), Integer(den_part));
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow_int(const Rational& base, long exponent) {
    if (exponent == 0) {
        return Rational(1);
    }
    if (base == 0 && exponent < 0) {
        throw ZeroDivisor("negative power of zero");
    }
    Rational result;
    const unsigned long mag = exponent > 0 ? static_cast<unsigned long>(exponent)
                                           : static_cast<unsigned long>(-exponent);
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), mag);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), mag);
    if (exponent < 0) {
        mpq_inv(result.get_mpq_t(), result.get_mpq_t());
    }
    result.canonicalize();
    return result;
}

bool is_integer(const Rational& value) {
    return value.get_den() == 1;
}

bool is_integer_in(const Rational& value, long lo, long hi) {
    if (!is_integer(value)) return false;
    return value.get_num() >= lo && value.get_num() <= hi;
}

long to_long(const Rational& value) {
    if (!is_integer(value)) {
        throw std::invalid_argument("not an integer: " + to_string(value));
    }
    if (!value.get_num().fits_slong_p()) {
        throw std::overflow_error("integer out of range: " + to_string(value));
    }
    return value.get_num().get_si();
}

} // namespace rihahn
