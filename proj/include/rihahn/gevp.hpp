#pragma once

#include "rihahn/basis.hpp"
#include "rihahn/operators.hpp"
#include "rihahn/parameters.hpp"

#include <nlohmann/json_fwd.hpp>

#include <vector>

namespace rihahn {

/// Solution of the generalized eigenvalue problem M P_n = lambda_n L P_n (phi
/// basis) or of the adjoint ordinary eigenvalue problem Z* V_n = n V_n (rho
/// basis). coefficients[0] = 1 and coefficients[k] = 0 for k > n.
struct GEVPSolution {
    long n = 0;
    Rational eigenvalue;
    BasisTag basis_tag = BasisTag::phi;
    std::vector<Rational> coefficients;
};

nlohmann::json gevp_solution_to_json(const GEVPSolution& s);

/// Eigenvalues eta_n^(3)/eta_n^(1) of the bidiagonal pencil; always 0..N.
std::vector<Rational> bidiagonal_gevp_eigenvalues(const ParameterSet& p);

/// Coefficients c_{n,k} of P_n in the phi basis, solved by the two-term
/// recurrence and cross-checked against the closed form
/// (-n)_k (alpha+1)_k / [k! (-N)_k (1-beta-n)_k]; the two routes must agree
/// exactly.
GEVPSolution solve_P_coefficients(long n, const ParameterSet& p);

/// Coefficients d_{n,k} of V_n in the rho basis (recurrence cross-checked
/// against (-n)_k (-alpha-N)_k / [k! (-N)_k]).
GEVPSolution solve_V_coefficients(long n, const ParameterSet& p);

/// apply(M, P_n) - n apply(L, P_n) on the grid; identically zero.
GridFunction gevp_residual(long n, const ParameterSet& p);

/// Residual of the adjoint GEVP (M* - n L*) P*_n in rho coordinates, with
/// P*_n recovered from V_n = L* P*_n by bidiagonal back-substitution;
/// identically zero.
std::vector<Rational> adjoint_gevp_residual(long n, const ParameterSet& p);

} // namespace rihahn
