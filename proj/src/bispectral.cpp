#include "rihahn/bispectral.hpp"

#include "rihahn/errors.hpp"
#include "rihahn/families.hpp"
#include "rihahn/operators.hpp"
#include "rihahn/pochhammer.hpp"

#include <nlohmann/json.hpp>

namespace rihahn {

namespace {

nlohmann::ordered_json params_json(const ParameterSet& p) {
    return {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"N", p.N}};
}

std::string pair_detail(const Rational& got, const Rational& want) {
    return "got " + to_string(got) + ", expected " + to_string(want);
}

GridFunction family_row(long n, const ParameterSet& p) {
    GridFunction values(p.N + 1);
    for (long x = 0; x <= p.N; ++x) values[x] = P(n, Rational(x), p);
    return values;
}

std::vector<Rational> offgrid_points(long count) {
    // fixed rational sample points clear of the integer grid
    std::vector<Rational> xs;
    for (long j = 0; j < count; ++j) {
        xs.push_back(make_rational(2 * j + 1, 2) + make_rational(1, 3 + j));
    }
    return xs;
}

} // namespace

RecurrenceCoefficients recurrence_coefficients(long n, const ParameterSet& p) {
    p.validate();
    const Rational alpha = p.alpha;
    const Rational beta = p.beta;
    const long N = p.N;
    return RecurrenceCoefficients{
        (Rational(2 * n * n) + (alpha + 2 * beta - N) * n - beta * N) / (n + alpha + 1),
        n * (alpha + beta + n) * (N + 1 - n) / ((alpha + n) * (alpha + 1 + n)),
        n + beta - 1,
        (n - N) * (beta + n),
        n * (alpha + beta + n),
    };
}

IdentityReport verify_Y_action(const ParameterSet& p) {
    p.validate();
    IdentityReport report{"Y_action", params_json(p), {}, {}};
    const long N = p.N;
    const DifferenceOperator Y = make_Y(p);
    const DifferenceOperator L = make_L(p);
    for (long n = 0; n <= N; ++n) {
        const auto rc = recurrence_coefficients(n, p);
        const GridFunction Pn = family_row(n, p);
        const GridFunction Pm = n >= 1 ? family_row(n - 1, p) : GridFunction(N + 1, Rational(0));
        const GridFunction Pp = n + 1 <= N ? family_row(n + 1, p) : GridFunction(N + 1, Rational(0));
        const GridFunction YP = apply_operator(Y, Pn);
        const GridFunction LP = apply_operator(L, Pn);
        const Rational l_coeff = n * (p.alpha + p.beta + n) / (1 - p.beta - n);
        for (long x = 0; x <= N; ++x) {
            const Rational y_rhs = rc.A * Pp[x] - (rc.A + rc.B) * Pn[x] + rc.B * Pm[x];
            if (YP[x] != y_rhs) {
                report.add("Y_Pn(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           pair_detail(YP[x], y_rhs));
            }
            const Rational l_rhs = -(n + p.alpha + 1) * Pn[x] - l_coeff * Pm[x];
            if (LP[x] != l_rhs) {
                report.add("L_Pn(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           pair_detail(LP[x], l_rhs));
            }
        }
    }
    return report;
}

IdentityReport verify_recurrence_nonmonic(const ParameterSet& p) {
    p.validate();
    IdentityReport report{"recurrence_nonmonic", params_json(p), {}, {}};
    const long N = p.N;
    for (long n = 0; n <= N; ++n) {
        const auto rc = recurrence_coefficients(n, p);
        std::vector<Rational> xs;
        for (long x = 0; x <= N; ++x) xs.push_back(Rational(x));
        if (n < N) {
            // off the grid the identity needs P_{n+1}, so n = N is grid-only
            for (const Rational& x : offgrid_points(5)) xs.push_back(x);
        }
        const Rational l_coeff = n * (p.alpha + p.beta + n) / (1 - p.beta - n);
        for (const Rational& x : xs) {
            const Rational Pn = P(n, x, p);
            const Rational Pm = n >= 1 ? P(n - 1, x, p) : Rational(0);
            const Rational Pp = n + 1 <= N ? P(n + 1, x, p) : Rational(0);
            const Rational lhs = rc.A * Pp - (rc.A + rc.B) * Pn + rc.B * Pm;
            const Rational rhs = -x * ((n + p.alpha + 1) * Pn + l_coeff * Pm);
            if (lhs != rhs) {
                report.add("recurrence(n=" + std::to_string(n) + ",x=" + to_string(x) + ")",
                           pair_detail(lhs, rhs));
            }
        }
    }
    return report;
}

IdentityReport verify_recurrence_monic(const ParameterSet& p) {
    p.validate();
    IdentityReport report{"recurrence_monic", params_json(p), {}, {}};
    const long N = p.N;
    std::vector<Rational> xs;
    for (long j = 0; j <= N + 1; ++j) xs.push_back(make_rational(3 * j + 1, 3));
    for (long n = 1; n <= N - 1; ++n) {
        const auto rc = recurrence_coefficients(n, p);
        for (const Rational& x : xs) {
            const Rational lhs = monic_p(n + 1, x, p) + (rc.gamma - x) * monic_p(n, x, p) +
                                 rc.delta * (x - rc.epsilon) * monic_p(n - 1, x, p);
            if (lhs != 0) {
                report.add("recmonic(n=" + std::to_string(n) + ",x=" + to_string(x) + ")",
                           pair_detail(lhs, Rational(0)));
            }
        }
    }
    return report;
}

IdentityReport verify_difference_equation(const ParameterSet& p) {
    p.validate();
    IdentityReport report{"difference_equation", params_json(p), {}, {}};
    const long N = p.N;
    const DifferenceOperator M = make_M(p);
    for (long n = 0; n <= N; ++n) {
        for (long x = 0; x <= N; ++x) {
            const Rational Pn = P(n, Rational(x), p);
            // off-grid neighbours only behind nonzero coefficients
            Rational lhs = M.coeff_id(x) * Pn;
            Rational rhs_shift(0);
            if (M.coeff_plus(x) != 0) {
                lhs += M.coeff_plus(x) * P(n, Rational(x + 1), p);
            }
            if (M.coeff_minus(x) != 0) {
                lhs += M.coeff_minus(x) * P(n, Rational(x - 1), p);
            }
            if (x < N) {
                rhs_shift = (N - x) * P(n, Rational(x + 1), p);
            }
            const Rational rhs = n * (rhs_shift + (Rational(x - N - 1) - p.alpha) * Pn);
            if (lhs != rhs) {
                report.add("diffeq(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           pair_detail(lhs, rhs));
            }
        }
    }
    return report;
}

IdentityReport verify_parameter_shift(const ParameterSet& p) {
    p.validate();
    const ParameterSet shifted{p.alpha + 1, p.beta - 1, p.N};
    shifted.validate();
    IdentityReport report{"parameter_shift", params_json(p), {}, {}};
    const long N = p.N;
    const DifferenceOperator L = make_L(p);
    const DifferenceOperator M = make_M(p);
    const DifferenceOperator Y = make_Y(p);
    for (long n = 0; n <= N; ++n) {
        const Rational denom = 1 - p.beta - n;
        if (denom == 0) {
            throw PoleInDenominator("(1-beta-n) vanishes in the shift factor");
        }
        const Rational factor = (p.alpha + 1) * (1 - p.beta) / denom;
        const GridFunction Pn = family_row(n, p);
        const GridFunction Ps = family_row(n, shifted);
        const GridFunction LP = apply_operator(L, Pn);
        const GridFunction MP = apply_operator(M, Pn);
        const GridFunction YP = apply_operator(Y, Pn);
        for (long x = 0; x <= N; ++x) {
            if (LP[x] != -factor * Ps[x]) {
                report.add("L_shift(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           pair_detail(LP[x], Rational(-factor * Ps[x])));
            }
            if (MP[x] != -n * factor * Ps[x]) {
                report.add("M_shift(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           pair_detail(MP[x], Rational(-n * factor * Ps[x])));
            }
            if (YP[x] != -x * factor * Ps[x]) {
                report.add("Y_shift(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           pair_detail(YP[x], Rational(-x * factor * Ps[x])));
            }
        }
        // contiguity back onto the unshifted family, on and off the grid
        std::vector<Rational> xs;
        for (long x = 0; x <= N; ++x) xs.push_back(Rational(x));
        for (const Rational& x : offgrid_points(3)) xs.push_back(x);
        for (const Rational& x : xs) {
            const Rational lhs = factor * P(n, x, shifted);
            const Rational rhs = (n + p.alpha + 1) * P(n, x, p) +
                                 n * (p.alpha + p.beta + n) / denom *
                                     (n >= 1 ? P(n - 1, x, p) : Rational(0));
            if (lhs != rhs) {
                report.add("contiguity(n=" + std::to_string(n) + ",x=" + to_string(x) + ")",
                           pair_detail(lhs, rhs));
            }
        }
    }
    return report;
}

IdentityReport verify_askey_recurrence(const Rational& alpha,
                                       const Rational& beta,
                                       long n_max,
                                       std::span<const Rational> x_samples) {
    IdentityReport report{"askey_recurrence",
                          {{"alpha", to_string(alpha)}, {"beta", to_string(beta)}},
                          {},
                          {}};
    auto p_tilde = [&](long n, const Rational& x) {
        const Rational scale = (n % 2 == 0 ? Rational(1) : Rational(-1)) *
                               pochhammer(1 - beta - n, n) / pochhammer(alpha + 1, n);
        return scale * askey_P(n, x, alpha, beta);
    };
    for (long n = 1; n <= n_max; ++n) {
        const Rational a_den = (n + alpha) * (n + alpha + 1);
        if (a_den == 0) {
            throw PoleInDenominator("(n+alpha)(n+alpha+1) vanishes");
        }
        for (const Rational& x : x_samples) {
            const Rational lhs = p_tilde(n + 1, x) -
                                 ((n + beta) / (n + alpha + 1) + x) * p_tilde(n, x) +
                                 x * n * (n + alpha + beta) / a_den * p_tilde(n - 1, x);
            if (lhs != 0) {
                report.add("recAsk(n=" + std::to_string(n) + ",x=" + to_string(x) + ")",
                           pair_detail(lhs, Rational(0)));
            }
        }
    }
    return report;
}

} // namespace rihahn
