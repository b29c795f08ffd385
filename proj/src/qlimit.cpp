#include "rihahn/qlimit.hpp"

#include "rihahn/errors.hpp"
#include "rihahn/families.hpp"
#include "rihahn/hypergeometric.hpp"
#include "rihahn/pochhammer.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <ostream>

namespace rihahn {

QParameterSet QParameterSet::from_exponents(long a, long d, const Rational& q, long N,
                                            std::optional<Rational> e) {
    QParameterSet qp{q, pow_int(q, a), pow_int(q, d), std::move(e), N};
    qp.validate();
    return qp;
}

QParameterSet QParameterSet::from_parameter_map(const ParameterSet& p, const Rational& q,
                                                std::optional<Rational> e) {
    p.validate();
    if (!is_integer(p.alpha) || !is_integer(p.beta)) {
        throw InvalidParameters(
            "the q-side parameter map a = beta-N, d = -alpha-N needs integer alpha and beta "
            "(q^a is irrational otherwise); got alpha = " +
            to_string(p.alpha) + ", beta = " + to_string(p.beta));
    }
    return from_exponents(to_long(p.beta) - p.N, -to_long(p.alpha) - p.N, q, p.N,
                          std::move(e));
}

void QParameterSet::validate() const {
    if (N < 0) throw InvalidParameters("N must be non-negative");
    if (!(q > 0 && q < 1)) throw InvalidParameters("q must satisfy 0 < q < 1");
    if (qa == 0 || qd == 0) throw InvalidParameters("q^a and q^d must be nonzero");
    if (e && *e == 0) throw InvalidParameters("e must be nonzero");

    // every q-Pochhammer denominator of the implemented forms, over the
    // index ranges actually used
    std::vector<std::pair<Rational, std::string>> bases;
    bases.emplace_back(q * qa / qd, "(q^{a+1-d};q)_n");
    bases.emplace_back(qd, "(q^d;q)_N");
    bases.emplace_back(qd / (qa * pow_int(q, N)), "(q^{-N-a+d};q)_x");
    for (long x = 0; x <= N; ++x) {
        bases.emplace_back(pow_int(q, N - x + 1) * qa, "(q^{N-x+a+1};q)_k");
    }
    for (long m = 0; m <= N; ++m) {
        bases.emplace_back(pow_int(q, 1 - N - m) / qa, "(q^{-N-m+1-a};q)_k");
    }
    if (e) {
        bases.emplace_back(q * qa / *e, "(q^{a+1}/e;q)_n");
        for (long n = 0; n <= N; ++n) {
            bases.emplace_back(pow_int(q, -n) * qd * *e / qa, "(q^{d-n-a}e;q)_k");
        }
    }
    for (const auto& [base, name] : bases) {
        Rational factor = base;
        for (long i = 0; i < N; ++i) {
            if (factor == 1) {
                throw InvalidParameters("q-Pochhammer denominator " + name +
                                        " vanishes at factor index " + std::to_string(i));
            }
            factor *= q;
        }
    }
}

Rational u_tilde(long n, long x, const QParameterSet& qp) {
    qp.validate();
    if (!qp.e) throw InvalidParameters("u_tilde needs the finite parameter e");
    if (n < 0 || n > qp.N || x < 0 || x > qp.N) {
        throw InvalidParameters("index outside 0..N");
    }
    const Rational& q = qp.q;
    const Rational& A = qp.qa;
    const Rational& D = qp.qd;
    const Rational& e = *qp.e;
    const Rational prefactor = q_pochhammer(q * A, q, n) * q_pochhammer(q * A / (D * e), q, n) /
                               (q_pochhammer(q * A / D, q, n) * q_pochhammer(q * A / e, q, n));
    const std::array<Rational, 4> num{pow_int(q, -n), pow_int(q, -x), D, e};
    const std::array<Rational, 3> den{pow_int(q, -qp.N), pow_int(q, qp.N - x + 1) * A,
                                      pow_int(q, -n) * D * e / A};
    return prefactor * basic_hyp_terminating(num, den, q, q);
}

Rational u_tilde_einf(long n, long x, const QParameterSet& qp) {
    qp.validate();
    if (n < 0 || n > qp.N || x < 0 || x > qp.N) {
        throw InvalidParameters("index outside 0..N");
    }
    const Rational& q = qp.q;
    const Rational& A = qp.qa;
    const Rational& D = qp.qd;
    const Rational prefactor = q_pochhammer(q * A, q, n) / q_pochhammer(q * A / D, q, n);
    const std::array<Rational, 3> num{pow_int(q, -n), pow_int(q, -x), D};
    const std::array<Rational, 2> den{pow_int(q, -qp.N), pow_int(q, qp.N - x + 1) * A};
    return prefactor * basic_hyp_terminating(num, den, q, pow_int(q, 1 + n) * A / D);
}

Rational v_tilde_einf(long m, long x, const QParameterSet& qp) {
    qp.validate();
    if (m < 0 || m > qp.N || x < 0 || x > qp.N) {
        throw InvalidParameters("index outside 0..N");
    }
    const Rational& q = qp.q;
    const Rational& A = qp.qa;
    const Rational& D = qp.qd;
    const Rational prefactor =
        q_pochhammer(pow_int(q, qp.N) * A, q, m) / q_pochhammer(q * A / D, q, m);
    const std::array<Rational, 3> num{pow_int(q, -m), pow_int(q, -x),
                                      pow_int(q, -qp.N + 1) / D};
    const std::array<Rational, 2> den{pow_int(q, -qp.N), pow_int(q, -qp.N - m + 1) / A};
    return prefactor * basic_hyp_terminating(num, den, q, q);
}

Rational w_einf(long x, const QParameterSet& qp) {
    qp.validate();
    if (x < 0 || x > qp.N) throw InvalidParameters("grid point outside 0..N");
    const Rational& q = qp.q;
    const Rational& A = qp.qa;
    const Rational& D = qp.qd;
    const long N = qp.N;
    const Rational global = q_pochhammer(q * A / D, q, N) * q_pochhammer(pow_int(q, -N), q, N) /
                            (q_pochhammer(D, q, N) * q_pochhammer(q, q, N));
    const Rational local =
        q_pochhammer(pow_int(q, -N) / A, q, x) * q_pochhammer(pow_int(q, -N), q, x) /
        (q_pochhammer(pow_int(q, -N) * D / A, q, x) * q_pochhammer(q, q, x));
    // q^{N(d-a)+x(N+d)} = (D/A)^N q^{xN} D^x
    const Rational exponent = pow_int(D / A, N) * pow_int(q, x * N) * pow_int(D, x);
    return global * local * exponent;
}

Rational h_einf(long n, const QParameterSet& qp) {
    qp.validate();
    if (n < 0 || n > qp.N) throw InvalidParameters("degree outside 0..N");
    const Rational& q = qp.q;
    return pow_int(q, -n) * q_pochhammer(q, q, n) * q_pochhammer(q * qp.qa, q, n) /
           (q_pochhammer(pow_int(q, -qp.N), q, n) * q_pochhammer(q * qp.qa / qp.qd, q, n));
}

GramReport q_gram_einf(const QParameterSet& qp) {
    qp.validate();
    const long N = qp.N;
    GramReport report;
    report.params = {{"q", to_string(qp.q)},
                     {"qa", to_string(qp.qa)},
                     {"qd", to_string(qp.qd)},
                     {"N", N}};
    std::vector<Rational> w(N + 1);
    std::vector<std::vector<Rational>> U(N + 1, std::vector<Rational>(N + 1));
    std::vector<std::vector<Rational>> Vv(N + 1, std::vector<Rational>(N + 1));
    for (long x = 0; x <= N; ++x) {
        w[x] = w_einf(x, qp);
        for (long n = 0; n <= N; ++n) {
            U[n][x] = u_tilde_einf(n, x, qp);
            Vv[n][x] = v_tilde_einf(n, x, qp);
        }
    }
    report.gram.assign(N + 1, std::vector<Rational>(N + 1));
    for (long n = 0; n <= N; ++n) {
        report.expected_diag.push_back(h_einf(n, qp));
        for (long m = 0; m <= N; ++m) {
            Rational sum(0);
            for (long x = 0; x <= N; ++x) sum += w[x] * U[n][x] * Vv[m][x];
            report.gram[n][m] = sum;
            const Rational want = n == m ? report.expected_diag[n] : Rational(0);
            if (sum != want) {
                report.violations.push_back(
                    {"q_gram(" + std::to_string(n) + "," + std::to_string(m) + ")",
                     "got " + to_string(sum) + ", expected " + to_string(want)});
            }
        }
        if (report.expected_diag[n] == 0) {
            report.flags.push_back("h~_" + std::to_string(n) + " = 0");
        }
    }
    return report;
}

Rational q_limit_target_U(long n, long x, const Rational& a, const Rational& d, long N) {
    const std::array<Rational, 3> num{Rational(-n), Rational(-x), d};
    const std::array<Rational, 2> den{Rational(-N), N - x + a + 1};
    return pochhammer(a + 1, n) / pochhammer(a + 1 - d, n) *
           hyp_terminating(num, den, Rational(1));
}

Rational q_limit_target_V(long m, long x, const Rational& a, const Rational& d, long N) {
    const std::array<Rational, 3> num{Rational(-m), Rational(-x), Rational(-N + 1) - d};
    const std::array<Rational, 2> den{Rational(-N), Rational(-N - m + 1) - a};
    return pochhammer(a + N, m) / pochhammer(a + 1 - d, m) *
           hyp_terminating(num, den, Rational(1));
}

Rational q_limit_target_w(long x, const Rational& a, const Rational& d, long N) {
    return pochhammer(a + 1 - d, N) * pochhammer(Rational(-N), N) /
           (factorial(N) * pochhammer(d, N)) * pochhammer(-N - a, x) *
           pochhammer(Rational(-N), x) / (factorial(x) * pochhammer(-N - a + d, x));
}

Rational q_limit_target_h(long n, const Rational& a, const Rational& d, long N) {
    return factorial(n) * pochhammer(a + 1, n) /
           (pochhammer(Rational(-N), n) * pochhammer(a + 1 - d, n));
}

IdentityReport q_limit_targets_match_families(const ParameterSet& p) {
    p.validate();
    IdentityReport report{"q_limit_targets",
                          {{"alpha", to_string(p.alpha)},
                           {"beta", to_string(p.beta)},
                           {"N", p.N}},
                          {},
                          {}};
    const Rational a = p.beta - p.N;
    const Rational d = -p.alpha - p.N;
    const long N = p.N;
    for (long n = 0; n <= N; ++n) {
        const Rational u_pref = pochhammer(a + 1, n) / pochhammer(a + 1 - d, n);
        const Rational v_pref = pochhammer(p.beta, n) / pochhammer(p.alpha + p.beta + 1, n);
        for (long x = 0; x <= N; ++x) {
            const Rational tu = q_limit_target_U(n, x, a, d, N);
            const Rational want_u = u_pref * V(n, x, p);
            if (tu != want_u) {
                report.add("target_U(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           "got " + to_string(tu) + ", expected " + to_string(want_u));
            }
            const Rational tv = q_limit_target_V(n, x, a, d, N);
            const Rational want_v = v_pref * P(n, Rational(x), p);
            if (tv != want_v) {
                report.add("target_V(m=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           "got " + to_string(tv) + ", expected " + to_string(want_v));
            }
        }
    }
    return report;
}

std::vector<Rational> default_q_sequence(long k_lo, long k_hi) {
    std::vector<Rational> qs;
    for (long k = k_lo; k <= k_hi; ++k) {
        qs.push_back(1 - pow_int(Rational(1, 2), k));
    }
    return qs;
}

bool QLimitReport::decrease_factor_at_least(long factor) const {
    if (rows.size() < 2) return false;
    const QDeltaRow& first = rows.front();
    const QDeltaRow& last = rows.back();
    auto column_ok = [factor](const Rational& head, const Rational& tail) {
        if (head == 0 && tail == 0) return true; // exact all along
        return factor * tail <= head;
    };
    return column_ok(first.delta_U, last.delta_U) && column_ok(first.delta_V, last.delta_V) &&
           column_ok(first.delta_w, last.delta_w) && column_ok(first.delta_h, last.delta_h);
}

void QLimitReport::write_csv(std::ostream& out) const {
    out << "k,q,delta_U,delta_V,delta_w,delta_h\n";
    for (const QDeltaRow& row : rows) {
        out << row.k << "," << to_string(row.q) << "," << to_string(row.delta_U) << ","
            << to_string(row.delta_V) << "," << to_string(row.delta_w) << ","
            << to_string(row.delta_h) << "\n";
    }
}

nlohmann::ordered_json QLimitReport::to_json() const {
    nlohmann::ordered_json j;
    j["params"] = params;
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const QDeltaRow& row : rows) {
        rows_json.push_back({{"k", row.k},
                             {"q", to_string(row.q)},
                             {"delta_U", to_string(row.delta_U)},
                             {"delta_V", to_string(row.delta_V)},
                             {"delta_w", to_string(row.delta_w)},
                             {"delta_h", to_string(row.delta_h)}});
    }
    j["rows"] = rows_json;
    j["status"] = ok() ? "pass" : "fail";
    j["violations"] = violations_to_json(violations);
    if (!flags.empty()) j["flags"] = flags;
    return j;
}

QLimitReport q_to_1_limit_check(const ParameterSet& p, std::span<const Rational> q_sequence) {
    p.validate();
    QLimitReport report;
    report.params = {{"alpha", to_string(p.alpha)},
                     {"beta", to_string(p.beta)},
                     {"N", p.N}};
    const long N = p.N;

    // the limit targets must be the R_I families up to normalization
    const IdentityReport targets = q_limit_targets_match_families(p);
    for (const Violation& v : targets.violations) report.violations.push_back(v);

    const Rational a = p.beta - p.N;
    const Rational d = -p.alpha - p.N;
    long k = 0;
    for (const Rational& q : q_sequence) {
        const QParameterSet qp = QParameterSet::from_parameter_map(p, q);
        QDeltaRow row;
        row.k = k++;
        row.q = q;
        for (long n = 0; n <= N; ++n) {
            for (long x = 0; x <= N; ++x) {
                const Rational du = abs(u_tilde_einf(n, x, qp) - q_limit_target_U(n, x, a, d, N));
                const Rational dv = abs(v_tilde_einf(n, x, qp) - q_limit_target_V(n, x, a, d, N));
                if (du > row.delta_U) row.delta_U = du;
                if (dv > row.delta_V) row.delta_V = dv;
            }
            const Rational dh = abs(h_einf(n, qp) - q_limit_target_h(n, a, d, N));
            if (dh > row.delta_h) row.delta_h = dh;
        }
        for (long x = 0; x <= N; ++x) {
            const Rational dw = abs(w_einf(x, qp) - q_limit_target_w(x, a, d, N));
            if (dw > row.delta_w) row.delta_w = dw;
        }
        report.rows.push_back(std::move(row));
    }

    auto check_monotone = [&](const char* name, auto member) {
        bool all_zero = true;
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            if (report.rows[i].*member != 0) all_zero = false;
            if (i == 0) continue;
            if (!(report.rows[i].*member < report.rows[i - 1].*member)) {
                report.violations.push_back(
                    {std::string(name) + "(k=" + std::to_string(report.rows[i].k) + ")",
                     "delta not strictly decreasing: " +
                         to_string(report.rows[i - 1].*member) + " -> " +
                         to_string(report.rows[i].*member)});
            }
        }
        if (all_zero) {
            // limit attained exactly at every q; nothing to decrease
            report.flags.push_back(std::string(name) + " identically zero (exact)");
        }
    };
    if (!report.rows.empty()) {
        check_monotone("delta_U", &QDeltaRow::delta_U);
        check_monotone("delta_V", &QDeltaRow::delta_V);
        check_monotone("delta_w", &QDeltaRow::delta_w);
        check_monotone("delta_h", &QDeltaRow::delta_h);
    }
    return report;
}

std::vector<Rational> u_tilde_finite_e_deltas(const QParameterSet& qp,
                                              std::span<const Rational> e_values) {
    std::vector<Rational> deltas;
    deltas.reserve(e_values.size());
    for (const Rational& e : e_values) {
        QParameterSet finite = qp;
        finite.e = e;
        finite.validate();
        Rational max_delta(0);
        for (long n = 0; n <= qp.N; ++n) {
            for (long x = 0; x <= qp.N; ++x) {
                const Rational delta =
                    abs(u_tilde(n, x, finite) - u_tilde_einf(n, x, qp));
                if (delta > max_delta) max_delta = delta;
            }
        }
        deltas.push_back(max_delta);
    }
    return deltas;
}

} // namespace rihahn
