#pragma once

#include "rihahn/operators.hpp"
#include "rihahn/parameters.hpp"
#include "rihahn/rational.hpp"
#include "rihahn/report.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <vector>

namespace rihahn {

/// w_x(alpha,beta) = [(-a-b-N)_N/(-a-N)_N] (-N)_x (-b)_x / [x! (-a-b-N)_x].
/// Normalized so the weights sum to 1 exactly; individual weights may be
/// negative (the biorthogonality is not positive-definite).
Rational weight(long x, const ParameterSet& p);

struct WeightVector {
    ParameterSet params;
    std::vector<Rational> values;

    void write_csv(std::ostream& out) const;
};

WeightVector weight_vector(const ParameterSet& p);

/// (f, g) = sum_x w_x f(x) g(x).
Rational scalar_product(const GridFunction& f, const GridFunction& g, const ParameterSet& p);

/// h_n = n! (1+alpha+beta)_n / [(-N)_n (beta)_n].
Rational normalization_h(long n, const ParameterSet& p);

/// Full matrix of scalar products (P_n, V_m) against the expected diagonal.
/// Validity guarantees well-definedness, not nondegeneracy: a zero diagonal
/// entry is surfaced as a flag, never asserted away.
struct GramReport {
    nlohmann::ordered_json params;
    std::vector<std::vector<Rational>> gram;
    std::vector<Rational> expected_diag;
    std::vector<Violation> violations;
    std::vector<std::string> flags;

    bool ok() const { return violations.empty(); }
    nlohmann::ordered_json to_json() const;
};

GramReport gram_matrix(const ParameterSet& p);

/// sum_x w_x P_n(x) / (1+beta-x)_m; zero for m < n, Eq.-closed value at m = n.
Rational rational_moment_sum(long n, long m, const ParameterSet& p);

/// Closed form of the m = n moment:
/// (-1)^n (alpha+beta+1)_n n! / [(beta)_n (-N-alpha)_n (-beta-n)_n].
Rational rational_moment_closed(long n, const ParameterSet& p);

/// Hahn weight w^H_x = [(1+eta)_N/N!] (-N)_x (1+xi)_x / [x! (-eta-N)_x].
Rational hahn_weight(long x, const HahnParameterSet& hp);

/// Hahn normalization constant. The displayed form
///   (-1)^n (n+xi+eta+1)_{N+1} (eta+1)_n n! / [(2n+xi+eta+1)(xi+1)_n(-N)_n N!]
/// is evaluated with the (2n+xi+eta+1) factor cancelled against the j = n
/// factor of the Pochhammer, which keeps it finite where both vanish.
Rational hahn_norm(long n, const HahnParameterSet& hp);

GramReport hahn_gram(const HahnParameterSet& hp);

/// The parameter bridge xi = -beta-n, eta = alpha+beta between the classical
/// Hahn family and the R_I family, checked per n (the Hahn parameters depend
/// on the degree): H_n = P_n, the weight relation, the moment orthogonality,
/// and the closed moment values.
IdentityReport check_hahn_bridge(const ParameterSet& p);

/// The Christoffel chain behind the h_n derivation, at degree n (requires
/// n <= N-1): the Christoffel transform between xi and xi-1, the
/// Christoffel-Darboux expansion, the summed identity, and the mapped closed
/// forms. Throws ZeroDivisor when H_n(-xi; xi-1) = 0 (reported, not skipped).
IdentityReport christoffel_chain_check(long n, const ParameterSet& p);

} // namespace rihahn
