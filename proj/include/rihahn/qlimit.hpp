#pragma once

#include "rihahn/biorthogonality.hpp"
#include "rihahn/parameters.hpp"
#include "rihahn/rational.hpp"
#include "rihahn/report.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace rihahn {

/// Parameters of the 4phi3/3phi2 tower. The underlying biorthogonality is
/// rational in the multiplicative parameters, so qa and qd store the VALUES
/// written q^a and q^d in the series displays (exact for integer exponents,
/// and meaningful for arbitrary nonzero rationals).
struct QParameterSet {
    Rational q;  // 0 < q < 1
    Rational qa; // the value q^a
    Rational qd; // the value q^d
    std::optional<Rational> e; // finite-e forms only
    long N = 0;

    static QParameterSet from_exponents(long a, long d, const Rational& q, long N,
                                        std::optional<Rational> e = std::nullopt);

    /// a = beta-N, d = -alpha-N. Exact powers of q need integer exponents, so
    /// alpha and beta must be integers here (InvalidParameters otherwise).
    static QParameterSet from_parameter_map(const ParameterSet& p, const Rational& q,
                                            std::optional<Rational> e = std::nullopt);

    /// Checks 0 < q < 1, nonzero parameters, and that every q-Pochhammer
    /// denominator of the implemented forms is nonzero over the used ranges.
    void validate() const;
};

/// Finite-e function U~_n(x): prefactor times the terminating 4phi3.
Rational u_tilde(long n, long x, const QParameterSet& qp);

/// The four e -> infinity closed forms.
Rational u_tilde_einf(long n, long x, const QParameterSet& qp);
Rational v_tilde_einf(long m, long x, const QParameterSet& qp);
Rational w_einf(long x, const QParameterSet& qp);
Rational h_einf(long n, const QParameterSet& qp);

/// Gram matrix of the e -> infinity families under w_einf; exactly diagonal
/// with diagonal h_einf at rational q.
GramReport q_gram_einf(const QParameterSet& qp);

/// q -> 1 targets (plain hypergeometric, rational in the exponents a, d).
Rational q_limit_target_U(long n, long x, const Rational& a, const Rational& d, long N);
Rational q_limit_target_V(long m, long x, const Rational& a, const Rational& d, long N);
Rational q_limit_target_w(long x, const Rational& a, const Rational& d, long N);
Rational q_limit_target_h(long n, const Rational& a, const Rational& d, long N);

/// Checks that under a = beta-N, d = -alpha-N the q -> 1 targets match V_n
/// and P_m up to their stated prefactors (works for any valid rational
/// parameters; no q involved).
IdentityReport q_limit_targets_match_families(const ParameterSet& p);

struct QDeltaRow {
    long k = 0;
    Rational q;
    Rational delta_U;
    Rational delta_V;
    Rational delta_w;
    Rational delta_h;
};

/// Delta table of max |e-inf form - q->1 target| along a q sequence, plus the
/// target/family cross-check. Violations record any non-monotone column.
struct QLimitReport {
    nlohmann::ordered_json params;
    std::vector<QDeltaRow> rows;
    std::vector<Violation> violations;
    std::vector<std::string> flags;

    bool ok() const { return violations.empty(); }
    /// Largest f with last_delta * f <= first_delta across all four columns
    /// (0 when any column fails to decrease to a nonzero value).
    bool decrease_factor_at_least(long factor) const;
    void write_csv(std::ostream& out) const;
    nlohmann::ordered_json to_json() const;
};

/// q sequence 1 - 2^-k for k = k_lo..k_hi.
std::vector<Rational> default_q_sequence(long k_lo = 3, long k_hi = 10);

/// Runs the q -> 1 check under the parameter map (integer alpha, beta).
QLimitReport q_to_1_limit_check(const ParameterSet& p, std::span<const Rational> q_sequence);

/// max over n, x of |u_tilde at finite e - u_tilde_einf| for each e value.
std::vector<Rational> u_tilde_finite_e_deltas(const QParameterSet& qp,
                                              std::span<const Rational> e_values);

} // namespace rihahn
