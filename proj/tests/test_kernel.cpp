#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rihahn/errors.hpp"
#include "rihahn/hypergeometric.hpp"
#include "rihahn/parameters.hpp"
#include "rihahn/pochhammer.hpp"
#include "rihahn/random.hpp"
#include "rihahn/rational.hpp"

#include "support/test_oracle.hpp"

#include <array>

using namespace rihahn;

namespace {
Rational rat(long num, long den = 1) { return make_rational(num, den); }
} // namespace

TEST_CASE("rational parsing and serialization") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(parse_rational("0/5") == 0);
    CHECK_THROWS_AS(parse_rational("1/0"), ZeroDivisor);
    CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("rational canonical form survives arithmetic") {
    RationalSampler sampler(101);
    for (int i = 0; i < 200; ++i) {
        const Rational a = sampler.rational();
        const Rational b = sampler.nonzero_rational();
        const Rational sum = a + b, prod = a * b, quot = a / b;
        for (const Rational& v : {sum, prod, quot}) {
            CHECK(v.get_den() > 0);
            Integer g;
            mpz_gcd(g.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("pow_int") {
    CHECK(pow_int(rat(2, 3), 3) == rat(8, 27));
    CHECK(pow_int(rat(2, 3), -2) == rat(9, 4));
    CHECK(pow_int(rat(-5), 0) == 1);
    CHECK_THROWS_AS(pow_int(rat(0), -1), ZeroDivisor);
}

TEST_CASE("pochhammer examples") {
    CHECK(pochhammer(rat(7, 3), 0) == 1);
    CHECK(pochhammer(rat(-2), 2) == 2);
    CHECK(pochhammer(rat(1), 4) == 24);
    CHECK(factorial(5) == 120);
    CHECK(pochhammer_signed(rat(3), -1) == rat(1, 2));
    CHECK_THROWS_AS(pochhammer_signed(rat(1), -1), ZeroDivisor);
}

TEST_CASE("pochhammer concatenation (a)_{m+n} = (a)_m (a+m)_n") {
    for (long num = -6; num <= 6; ++num) {
        const Rational a = rat(num, 3);
        for (long m = 0; m <= 5; ++m) {
            for (long n = 0; n <= 5; ++n) {
                CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n));
            }
        }
    }
}

TEST_CASE("q-pochhammer examples") {
    CHECK(q_pochhammer(rat(5, 7), rat(1, 3), 0) == 1);
    CHECK(q_pochhammer(rat(1), rat(1, 2), 3) == 0);
    CHECK(q_pochhammer(rat(1, 2), rat(1, 2), 2) == rat(3, 8));
}

TEST_CASE("terminating hypergeometric sums") {
    SUBCASE("zero numerator parameter gives 1") {
        const std::array<Rational, 2> num{rat(0), rat(5, 3)};
        const std::array<Rational, 1> den{rat(-7, 2)};
        CHECK(hyp_terminating(num, den, rat(9)) == 1);
    }
    SUBCASE("Chu-Vandermonde value") {
        const std::array<Rational, 2> num{rat(-2), rat(1)};
        const std::array<Rational, 1> den{rat(3)};
        CHECK(hyp_terminating(num, den, rat(1)) == rat(1, 2));
    }
    SUBCASE("3F2 giving P_1(1) = 3 for N=2, alpha=1, beta=1/2") {
        const std::array<Rational, 3> num{rat(-1), rat(-1), rat(2)};
        const std::array<Rational, 2> den{rat(-2), rat(-1, 2)};
        CHECK(hyp_terminating(num, den, rat(1)) == 3);
    }
    SUBCASE("z = 0 gives 1") {
        const std::array<Rational, 2> num{rat(-4), rat(2, 3)};
        const std::array<Rational, 1> den{rat(1, 5)};
        CHECK(hyp_terminating(num, den, rat(0)) == 1);
    }
    SUBCASE("errors") {
        const std::array<Rational, 1> pos{rat(1, 2)};
        const std::array<Rational, 1> den{rat(3)};
        CHECK_THROWS_AS(hyp_terminating(pos, den, rat(1)), NonTerminating);
        const std::array<Rational, 1> num{rat(-3)};
        const std::array<Rational, 1> pole{rat(-2)};
        CHECK_THROWS_AS(hyp_terminating(num, pole, rat(1)), PoleInDenominator);
    }
    SUBCASE("agrees with the full-product oracle") {
        RationalSampler sampler(7);
        for (int trial = 0; trial < 50; ++trial) {
            const long n = sampler.integer(0, 6);
            const Rational b = sampler.rational();
            Rational c = sampler.rational();
            while (is_integer_in(c, -n, 0)) c += rat(1, 2);
            const Rational z = sampler.rational(4, 4);
            const std::array<Rational, 2> num{rat(-n), b};
            const std::array<Rational, 1> den{c};
            CHECK(hyp_terminating(num, den, z) == test_oracle::hyp({rat(-n), b}, {c}, z, n));
        }
    }
}

TEST_CASE("Chu-Vandermonde identity 2F1(-n,b;c;1) = (c-b)_n/(c)_n") {
    RationalSampler sampler(12345);
    int done = 0;
    while (done < 60) {
        const long n = sampler.integer(0, 8);
        const Rational b = sampler.rational();
        const Rational c = sampler.rational();
        if (pochhammer(c, n) == 0) continue;
        const std::array<Rational, 2> num{rat(-n), b};
        const std::array<Rational, 1> den{c};
        CHECK(hyp_terminating(num, den, rat(1)) == pochhammer(c - b, n) / pochhammer(c, n));
        ++done;
    }
}

TEST_CASE("terminating basic hypergeometric sums") {
    SUBCASE("numerator value 1 = q^0 terminates at k = 0") {
        const std::array<Rational, 3> num{rat(1), rat(1, 8), rat(3)};
        const std::array<Rational, 2> den{rat(5), rat(7)};
        CHECK(basic_hyp_terminating(num, den, rat(1, 2), rat(2, 3)) == 1);
    }
    SUBCASE("2phi1 against direct q-Pochhammer quotients") {
        // q = 1/2, numerator q^{-2}: sum_k (q^{-2};q)_k (a;q)_k / [(q;q)_k (d;q)_k] z^k
        const Rational q = rat(1, 2);
        const Rational a = rat(3, 5), d = rat(5, 9), z = rat(2, 7);
        const std::array<Rational, 2> num{rat(4), a};
        const std::array<Rational, 1> den{d};
        Rational want(0);
        for (long k = 0; k <= 2; ++k) {
            want += q_pochhammer(rat(4), q, k) * q_pochhammer(a, q, k) /
                    (q_pochhammer(q, q, k) * q_pochhammer(d, q, k)) * pow_int(z, k);
        }
        CHECK(basic_hyp_terminating(num, den, q, z) == want);
    }
    SUBCASE("extra factor for r <= s: 1phi1 term check") {
        // 1phi1(q^{-1}; d; q, z): k=1 term is (q^{-1};q)_1/[(q;q)_1 (d;q)_1] z (-1) q^0
        const Rational q = rat(1, 3), d = rat(2, 5), z = rat(1, 4);
        const std::array<Rational, 1> num{rat(3)};
        const std::array<Rational, 1> den{d};
        const Rational want =
            1 + q_pochhammer(rat(3), q, 1) / (q_pochhammer(q, q, 1) * q_pochhammer(d, q, 1)) *
                    z * rat(-1);
        CHECK(basic_hyp_terminating(num, den, q, z) == want);
    }
    SUBCASE("errors") {
        const std::array<Rational, 1> num{rat(1, 2)};
        const std::array<Rational, 1> den{rat(5)};
        CHECK_THROWS_AS(basic_hyp_terminating(num, den, rat(1, 2), rat(1)), NonTerminating);
        const std::array<Rational, 1> num2{rat(8)}; // q^{-3} at q = 1/2
        const std::array<Rational, 1> pole{rat(2)}; // (2;q)_k hits 1 - 2*(1/2) = 0
        CHECK_THROWS_AS(basic_hyp_terminating(num2, pole, rat(1, 2), rat(1)),
                        PoleInDenominator);
        CHECK_THROWS_AS(basic_hyp_terminating(num2, den, rat(3, 2), rat(1)),
                        InvalidParameters);
    }
}

TEST_CASE("q-Pochhammer shift identity") {
    CHECK(q_poch_shift_identity_check(rat(5, 4), rat(1, 2), 4, 0));
    CHECK(q_poch_shift_identity_check(rat(1, 3), rat(1, 2), 3, 1));
    CHECK(q_poch_shift_identity_check(rat(2, 7), rat(2, 5), 5, 5));
    CHECK_THROWS_AS(q_poch_shift_identity_check(rat(0), rat(1, 2), 3, 1), ZeroDivisor);

    RationalSampler sampler(77);
    int done = 0;
    while (done < 100) {
        const long n = sampler.integer(0, 8);
        const long k = sampler.integer(0, n);
        const Rational z = make_rational(sampler.integer(1, 30), sampler.integer(1, 9));
        const Rational q = make_rational(sampler.integer(1, 6), 7);
        if (q_pochhammer(pow_int(q, 1 - n) / z, q, k) == 0) continue;
        CHECK(q_poch_shift_identity_check(z, q, n, k));
        ++done;
    }
}

TEST_CASE("parameter validity boundary sweep") {
    // integer beta in [-N, N-1], integer alpha in [-N-1, -1] and integer
    // alpha+beta in [-N, -1] are rejected; everything else is accepted
    for (long N : {1L, 2L, 5L}) {
        for (long b = -N - 2; b <= N; ++b) {
            const ParameterSet p{rat(1, 2), rat(b), N};
            const bool pole = b >= -N && b <= N - 1;
            CHECK(p.valid() == !pole);
        }
        for (long a = -N - 2; a <= N; ++a) {
            const ParameterSet p{rat(a), rat(1, 2), N};
            const bool pole = a >= -N - 1 && a <= -1;
            CHECK(p.valid() == !pole);
        }
        // non-integer alpha and beta with integer sum
        for (long s = -N - 2; s <= N; ++s) {
            const ParameterSet p{rat(2 * s - 1, 2), rat(1, 2), N};
            const bool pole = s >= -N && s <= -1;
            CHECK(p.valid() == !pole);
        }
    }
    SUBCASE("validate names the violated condition") {
        const ParameterSet p{rat(1), rat(0), 2};
        CHECK_THROWS_WITH_AS(p.validate(), "beta = 0 is an integer in [-2, 1]",
                             InvalidParameters);
        CHECK(ParameterSet{rat(1), rat(1, 2), 2}.violation().empty());
    }
    SUBCASE("hahn validity") {
        CHECK(HahnParameterSet{rat(1, 3), rat(1, 4), 3}.valid());
        CHECK_FALSE(HahnParameterSet{rat(-2), rat(1, 4), 3}.valid());
        CHECK_FALSE(HahnParameterSet{rat(1, 3), rat(-3), 3}.valid());
        CHECK(HahnParameterSet{rat(-4), rat(1, 4), 3}.valid());
    }
}
