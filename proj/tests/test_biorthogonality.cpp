#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rihahn/biorthogonality.hpp"
#include "rihahn/errors.hpp"
#include "rihahn/families.hpp"
#include "rihahn/pochhammer.hpp"
#include "rihahn/random.hpp"

#include "support/test_oracle.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

using namespace rihahn;

namespace {
Rational rat(long num, long den = 1) { return make_rational(num, den); }
const ParameterSet kSmall{rat(1), rat(1, 2), 2};
const ParameterSet kSets[] = {
    kSmall,
    ParameterSet{rat(1, 3), rat(2, 5), 5},
    ParameterSet{rat(7, 2), rat(-1, 3), 8},
};
} // namespace

TEST_CASE("weights") {
    CHECK(weight(0, kSmall) == rat(35, 24));
    CHECK(weight(1, kSmall) == rat(-5, 12));
    CHECK(weight(2, kSmall) == rat(-1, 24));
    SUBCASE("normalization sum is 1 on random valid parameters") {
        RationalSampler sampler(4242);
        for (int trial = 0; trial < 25; ++trial) {
            const ParameterSet p = sampler.parameter_set(10);
            Rational sum(0);
            for (long x = 0; x <= p.N; ++x) sum += weight(x, p);
            CHECK(sum == 1);
        }
    }
    SUBCASE("prefactor identity") {
        for (const auto& p : kSets) {
            CHECK(pochhammer(-p.alpha - p.beta - p.N, p.N) / pochhammer(-p.alpha - p.N, p.N) ==
                  pochhammer(p.alpha + p.beta + 1, p.N) / pochhammer(p.alpha + 1, p.N));
        }
    }
    SUBCASE("CSV export") {
        std::ostringstream out;
        weight_vector(kSmall).write_csv(out);
        CHECK(out.str() == "x,w\n0,35/24\n1,-5/12\n2,-1/24\n");
    }
}

TEST_CASE("scalar product") {
    const GridFunction ones(3, Rational(1));
    CHECK(scalar_product(ones, ones, kSmall) == 1);
    SUBCASE("(P_1, V_0) = 0") {
        GridFunction p1(3);
        for (long x = 0; x <= 2; ++x) p1[x] = P(1, rat(x), kSmall);
        CHECK(scalar_product(p1, ones, kSmall) == 0);
    }
    SUBCASE("bilinearity") {
        RationalSampler sampler(8);
        const GridFunction f = sampler.grid_function(2);
        const GridFunction g = sampler.grid_function(2);
        const GridFunction h = sampler.grid_function(2);
        const Rational c = sampler.rational();
        GridFunction combo(3);
        for (long x = 0; x <= 2; ++x) combo[x] = g[x] + c * h[x];
        CHECK(scalar_product(f, combo, kSmall) ==
              scalar_product(f, g, kSmall) + c * scalar_product(f, h, kSmall));
    }
}

TEST_CASE("normalization constants") {
    CHECK(normalization_h(0, kSmall) == 1);
    CHECK(normalization_h(1, kSmall) == rat(-5, 2));
    CHECK(normalization_h(2, kSmall) == rat(35, 3));
}

TEST_CASE("gram matrix is diagonal with h_n") {
    SUBCASE("spot values at (N=2, alpha=1, beta=1/2)") {
        const GramReport report = gram_matrix(kSmall);
        CHECK(report.ok());
        CHECK(report.gram[0][0] == 1);
        CHECK(report.gram[1][1] == rat(-5, 2));
        CHECK(report.gram[2][2] == rat(35, 3));
        CHECK(report.gram[1][0] == 0);
        CHECK(report.gram[0][1] == 0);
    }
    SUBCASE("regression sets, cross-checked against the oracle") {
        for (const auto& p : kSets) {
            const GramReport report = gram_matrix(p);
            CHECK(report.ok());
            for (long n = 0; n <= p.N; ++n) {
                std::vector<Rational> pn(p.N + 1), vn(p.N + 1);
                for (long x = 0; x <= p.N; ++x) {
                    pn[x] = test_oracle::P(n, rat(x), p);
                    vn[x] = test_oracle::V(n, x, p);
                }
                CHECK(report.gram[n][n] == test_oracle::gram_entry(pn, vn, p));
                CHECK(report.gram[n][n] == normalization_h(n, p));
            }
        }
    }
    SUBCASE("JSON shape") {
        const nlohmann::ordered_json j = gram_matrix(kSmall).to_json();
        CHECK(j["status"] == "pass");
        CHECK(j["gram"][1][1] == "-5/2");
        CHECK(j["expected_diag"][2] == "35/3");
        CHECK(j["violations"].empty());
    }
}

TEST_CASE("rational moment sums") {
    CHECK(rational_moment_sum(0, 0, kSmall) == 1);
    CHECK(rational_moment_sum(1, 0, kSmall) == 0);
    SUBCASE("vanish for m < n and close at m = n") {
        for (const auto& p : kSets) {
            for (long n = 0; n <= p.N; ++n) {
                for (long m = 0; m < n; ++m) CHECK(rational_moment_sum(n, m, p) == 0);
                CHECK(rational_moment_sum(n, n, p) == rational_moment_closed(n, p));
            }
        }
    }
}

TEST_CASE("pochhammer reflection (a-m)_k = (1-a)_m (a)_k / (1-a-k)_m") {
    RationalSampler sampler(55);
    int done = 0;
    while (done < 60) {
        const Rational a = sampler.rational();
        const long m = sampler.integer(0, 5);
        const long k = sampler.integer(0, 5);
        if (pochhammer(1 - a - k, m) == 0) continue;
        CHECK(pochhammer(a - m, k) ==
              pochhammer(1 - a, m) * pochhammer(a, k) / pochhammer(1 - a - k, m));
        ++done;
    }
}

TEST_CASE("classical Hahn orthogonality") {
    const HahnParameterSet hp{rat(1, 3), rat(1, 4), 3};
    SUBCASE("h_0 is the weight sum") {
        Rational sum(0);
        for (long x = 0; x <= hp.N; ++x) sum += hahn_weight(x, hp);
        CHECK(sum == hahn_norm(0, hp));
    }
    SUBCASE("gram report") {
        const GramReport report = hahn_gram(hp);
        CHECK(report.ok());
        CHECK(report.gram[1][0] == 0);
        for (long n = 0; n <= hp.N; ++n) {
            CHECK(report.gram[n][n] == hahn_norm(n, hp));
        }
    }
    SUBCASE("norm stays finite where 2n+xi+eta+1 = 0") {
        // n = 1 makes 2n+xi+eta+1 vanish for xi+eta = -3; the cancelled form
        // must still match the direct weighted sum.
        const HahnParameterSet singular{rat(-7, 2), rat(1, 2), 3};
        const GramReport report = hahn_gram(singular);
        CHECK(report.ok());
    }
}

TEST_CASE("Hahn bridge identities") {
    for (const auto& p : kSets) {
        const IdentityReport report = check_hahn_bridge(p);
        INFO(nlohmann::ordered_json(report.to_json()).dump());
        CHECK(report.ok());
    }
    SUBCASE("wHparam spot check, n = 2, x = 1") {
        const long n = 2, x = 1;
        const HahnParameterSet hp{-kSmall.beta - n, kSmall.alpha + kSmall.beta, kSmall.N};
        const Rational lhs = hahn_weight(x, hp);
        const Rational rhs = pochhammer(kSmall.alpha + 1, kSmall.N) *
                             pochhammer(1 + kSmall.beta, n - 1) /
                             (factorial(kSmall.N) * pochhammer(1 + kSmall.beta - x, n - 1)) *
                             weight(x, kSmall);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Christoffel chain") {
    SUBCASE("n = 0 chain holds") {
        const IdentityReport report = christoffel_chain_check(0, kSmall);
        CHECK(report.ok());
    }
    SUBCASE("named example (N=3, alpha=1/3, beta=2/5), n = 1, 2") {
        const ParameterSet p{rat(1, 3), rat(2, 5), 3};
        for (long n : {1L, 2L}) {
            const IdentityReport report = christoffel_chain_check(n, p);
            INFO(nlohmann::ordered_json(report.to_json()).dump());
            CHECK(report.ok());
        }
    }
    SUBCASE("all regression sets, n <= N-1") {
        for (const auto& p : kSets) {
            for (long n = 0; n <= p.N - 1; ++n) {
                CHECK(christoffel_chain_check(n, p).ok());
            }
        }
    }
    SUBCASE("range is enforced") {
        CHECK_THROWS_AS(christoffel_chain_check(2, kSmall), InvalidParameters);
    }
    SUBCASE("integer beta = N hits the shifted-xi pole set") {
        // xi = -beta-0 = -N is a Hahn pole at n = 0
        const ParameterSet p{rat(1), rat(2), 2};
        CHECK_THROWS_AS(christoffel_chain_check(0, p), InvalidParameters);
    }
}
