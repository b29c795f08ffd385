#include "rihahn/gevp.hpp"

#include "rihahn/errors.hpp"
#include "rihahn/families.hpp"
#include "rihahn/pochhammer.hpp"

#include <nlohmann/json.hpp>

namespace rihahn {

nlohmann::json gevp_solution_to_json(const GEVPSolution& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : s.coefficients) coeffs.push_back(to_string(c));
    return nlohmann::json{{"n", s.n},
                          {"eigenvalue", to_string(s.eigenvalue)},
                          {"basis_tag", to_string(s.basis_tag)},
                          {"coefficients", coeffs}};
}

std::vector<Rational> bidiagonal_gevp_eigenvalues(const ParameterSet& p) {
    p.validate();
    std::vector<Rational> lambdas;
    lambdas.reserve(p.N + 1);
    for (long n = 0; n <= p.N; ++n) {
        const Rational eta1 = -(n + p.alpha + 1);
        const Rational eta3 = -n * (n + p.alpha + 1);
        lambdas.push_back(eta3 / eta1);
    }
    return lambdas;
}

GEVPSolution solve_P_coefficients(long n, const ParameterSet& p) {
    p.validate();
    if (n < 0 || n > p.N) {
        throw InvalidParameters("degree n outside 0..N");
    }
    const long N = p.N;
    std::vector<Rational> c(N + 1, Rational(0));
    c[0] = 1;
    for (long k = 0; k < N; ++k) {
        if (k >= n) break; // (k-n) factor zero from here on: c stays 0
        const Rational divisor = (k + 1) * Rational(k - N) * (k + 1 - p.beta - n);
        c[k + 1] = Rational(k - n) * (k + p.alpha + 1) * c[k] / divisor;
    }
    // closed-form cross-check (Eq.-level dual route, asserted always)
    for (long k = 0; k <= std::min(n, N); ++k) {
        const Rational closed = pochhammer(Rational(-n), k) * pochhammer(p.alpha + 1, k) /
                                (factorial(k) * pochhammer(Rational(-N), k) *
                                 pochhammer(1 - p.beta - n, k));
        if (closed != c[k]) {
            throw Error("recurrence and closed-form P coefficients disagree at k = " +
                        std::to_string(k));
        }
    }
    return GEVPSolution{n, Rational(n), BasisTag::phi, std::move(c)};
}

GEVPSolution solve_V_coefficients(long n, const ParameterSet& p) {
    p.validate();
    if (n < 0 || n > p.N) {
        throw InvalidParameters("degree n outside 0..N");
    }
    const long N = p.N;
    std::vector<Rational> d(N + 1, Rational(0));
    d[0] = 1;
    for (long k = 0; k < N; ++k) {
        if (k >= n) break;
        d[k + 1] = Rational(k - n) * (k - p.alpha - N) * d[k] /
                   ((k + 1) * Rational(k - N));
    }
    for (long k = 0; k <= std::min(n, N); ++k) {
        const Rational closed = pochhammer(Rational(-n), k) * pochhammer(-p.alpha - N, k) /
                                (factorial(k) * pochhammer(Rational(-N), k));
        if (closed != d[k]) {
            throw Error("recurrence and closed-form V coefficients disagree at k = " +
                        std::to_string(k));
        }
    }
    return GEVPSolution{n, Rational(n), BasisTag::rho, std::move(d)};
}

GridFunction gevp_residual(long n, const ParameterSet& p) {
    p.validate();
    GridFunction Pn(p.N + 1);
    for (long x = 0; x <= p.N; ++x) {
        Pn[x] = P(n, Rational(x), p);
    }
    const GridFunction MP = apply_operator(make_M(p), Pn);
    const GridFunction LP = apply_operator(make_L(p), Pn);
    GridFunction residual(p.N + 1);
    for (long x = 0; x <= p.N; ++x) {
        residual[x] = MP[x] - n * LP[x];
    }
    return residual;
}

std::vector<Rational> adjoint_gevp_residual(long n, const ParameterSet& p) {
    const GEVPSolution v = solve_V_coefficients(n, p);
    const BasisMatrix Ls = matrix_in_rho_basis(RhoOperator::Lstar, p);
    const BasisMatrix Ms = matrix_in_rho_basis(RhoOperator::Mstar, p);
    // Solve L* pstar = d; L* is lower bidiagonal with nonzero diagonal
    // chi^(2) under validity.
    const long N = p.N;
    std::vector<Rational> pstar(N + 1);
    pstar[0] = v.coefficients[0] / Ls.main_diag[0];
    for (long r = 1; r <= N; ++r) {
        pstar[r] = (v.coefficients[r] - Ls.sub[r - 1] * pstar[r - 1]) / Ls.main_diag[r];
    }
    const std::vector<Rational> mp = banded_apply(Ms, pstar);
    const std::vector<Rational> lp = banded_apply(Ls, pstar);
    std::vector<Rational> residual(N + 1);
    for (long r = 0; r <= N; ++r) {
        residual[r] = mp[r] - n * lp[r];
    }
    return residual;
}

} // namespace rihahn
