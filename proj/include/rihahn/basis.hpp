#pragma once

#include "rihahn/operators.hpp"
#include "rihahn/parameters.hpp"
#include "rihahn/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace rihahn {

enum class BasisTag { phi, rho, monomial };

std::string to_string(BasisTag tag);

/// Tridiagonal (N+1) x (N+1) matrix of an operator in a declared basis.
/// Column n holds the expansion of (operator applied to basis element n):
/// entry (n-1, n) on the super-diagonal, (n, n) on the main diagonal and
/// (n+1, n) on the sub-diagonal. Entries outside the three bands are
/// identically zero.
struct BasisMatrix {
    long order = 0; // N+1
    BasisTag basis_tag = BasisTag::phi;
    std::vector<Rational> sub;       // (i+1, i), size order-1
    std::vector<Rational> main_diag; // (i, i),   size order
    std::vector<Rational> super;     // (i, i+1), size order-1

    Rational at(long row, long col) const;
};

/// Banded product lhs * rhs; throws ZeroDivisor-free Error if the exact
/// product leaves the three bands.
BasisMatrix banded_product(const BasisMatrix& lhs, const BasisMatrix& rhs);

/// Matrix-vector product.
std::vector<Rational> banded_apply(const BasisMatrix& m, const std::vector<Rational>& v);

nlohmann::json basis_matrix_to_json(const BasisMatrix& m);

/// phi_n(x) = (-x)_n sampled on the grid x = 0..N.
GridFunction phi_basis(long n, long N);

/// rho_n(x) = (-x)_n / (1+beta-x)_n sampled on the grid.
GridFunction rho_basis(long n, const ParameterSet& p);

/// Coefficients a_k with f = sum_k a_k phi_k, by triangular back-substitution
/// (phi_n vanishes at x < n and phi_n(n) = (-1)^n n! != 0).
std::vector<Rational> expand_in_phi_basis(const GridFunction& f);

/// Same for the rho basis.
std::vector<Rational> expand_in_rho_basis(const GridFunction& f, const ParameterSet& p);

enum class GridOperator { L, M, Y };
enum class RhoOperator { Lstar, Mstar, Zstar };

/// Matrices of L, M, Y in the phi basis (coefficients eta^(1)..eta^(6)).
BasisMatrix matrix_in_phi_basis(GridOperator which, const ParameterSet& p);

/// Matrices of L*, M*, Z* in the rho basis (coefficients chi^(1)..chi^(5);
/// Z* has diagonal n and the rho_{n-1} coefficient -n(1+N-n)/(1+alpha+N-n)).
BasisMatrix matrix_in_rho_basis(RhoOperator which, const ParameterSet& p);

} // namespace rihahn
