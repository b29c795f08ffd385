#include "rihahn/biorthogonality.hpp"

#include "rihahn/errors.hpp"
#include "rihahn/families.hpp"
#include "rihahn/pochhammer.hpp"

#include <nlohmann/json.hpp>

#include <ostream>

namespace rihahn {

namespace {

nlohmann::ordered_json params_json(const ParameterSet& p) {
    return {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"N", p.N}};
}

nlohmann::ordered_json params_json(const HahnParameterSet& hp) {
    return {{"xi", to_string(hp.xi)}, {"eta", to_string(hp.eta)}, {"N", hp.N}};
}

std::string pair_detail(const Rational& got, const Rational& want) {
    return "got " + to_string(got) + ", expected " + to_string(want);
}

} // namespace

Rational weight(long x, const ParameterSet& p) {
    p.validate();
    if (x < 0 || x > p.N) {
        throw InvalidParameters("grid point outside 0..N");
    }
    const Rational prefactor = pochhammer(-p.alpha - p.beta - p.N, p.N) /
                               pochhammer(-p.alpha - p.N, p.N);
    return prefactor * pochhammer(Rational(-p.N), x) * pochhammer(-p.beta, x) /
           (factorial(x) * pochhammer(-p.alpha - p.beta - p.N, x));
}

WeightVector weight_vector(const ParameterSet& p) {
    p.validate();
    WeightVector w{p, {}};
    w.values.reserve(p.N + 1);
    for (long x = 0; x <= p.N; ++x) {
        w.values.push_back(weight(x, p));
    }
    return w;
}

void WeightVector::write_csv(std::ostream& out) const {
    out << "x,w\n";
    for (std::size_t x = 0; x < values.size(); ++x) {
        out << x << "," << to_string(values[x]) << "\n";
    }
}

Rational scalar_product(const GridFunction& f, const GridFunction& g, const ParameterSet& p) {
    p.validate();
    if (static_cast<long>(f.size()) != p.N + 1 || static_cast<long>(g.size()) != p.N + 1) {
        throw InvalidParameters("grid function has wrong length");
    }
    Rational sum(0);
    for (long x = 0; x <= p.N; ++x) {
        sum += weight(x, p) * f[x] * g[x];
    }
    return sum;
}

Rational normalization_h(long n, const ParameterSet& p) {
    p.validate();
    return factorial(n) * pochhammer(1 + p.alpha + p.beta, n) /
           (pochhammer(Rational(-p.N), n) * pochhammer(p.beta, n));
}

nlohmann::ordered_json GramReport::to_json() const {
    nlohmann::ordered_json j;
    j["params"] = params;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : gram) {
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const Rational& v : row) cells.push_back(to_string(v));
        rows.push_back(cells);
    }
    j["gram"] = rows;
    nlohmann::ordered_json diag = nlohmann::ordered_json::array();
    for (const Rational& v : expected_diag) diag.push_back(to_string(v));
    j["expected_diag"] = diag;
    j["status"] = ok() ? "pass" : "fail";
    j["violations"] = violations_to_json(violations);
    if (!flags.empty()) j["flags"] = flags;
    return j;
}

GramReport gram_matrix(const ParameterSet& p) {
    p.validate();
    const long N = p.N;
    GramReport report;
    report.params = params_json(p);
    std::vector<GridFunction> Pn(N + 1, GridFunction(N + 1)), Vm(N + 1, GridFunction(N + 1));
    for (long n = 0; n <= N; ++n) {
        for (long x = 0; x <= N; ++x) {
            Pn[n][x] = P(n, Rational(x), p);
            Vm[n][x] = V(n, x, p);
        }
    }
    report.gram.assign(N + 1, std::vector<Rational>(N + 1));
    for (long n = 0; n <= N; ++n) {
        report.expected_diag.push_back(normalization_h(n, p));
        for (long m = 0; m <= N; ++m) {
            report.gram[n][m] = scalar_product(Pn[n], Vm[m], p);
            const Rational want = n == m ? report.expected_diag[n] : Rational(0);
            if (report.gram[n][m] != want) {
                report.violations.push_back({"gram(" + std::to_string(n) + "," +
                                                 std::to_string(m) + ")",
                                             pair_detail(report.gram[n][m], want)});
            }
        }
        if (report.expected_diag[n] == 0) {
            report.flags.push_back("h_" + std::to_string(n) +
                                   " = 0: biorthogonal system degenerate at this degree");
        }
    }
    return report;
}

Rational rational_moment_sum(long n, long m, const ParameterSet& p) {
    p.validate();
    if (n < 0 || n > p.N || m < 0 || m > p.N) {
        throw InvalidParameters("index outside 0..N");
    }
    Rational sum(0);
    for (long x = 0; x <= p.N; ++x) {
        sum += weight(x, p) * P(n, Rational(x), p) / pochhammer(1 + p.beta - x, m);
    }
    return sum;
}

Rational rational_moment_closed(long n, const ParameterSet& p) {
    p.validate();
    const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    return sign * pochhammer(p.alpha + p.beta + 1, n) * factorial(n) /
           (pochhammer(p.beta, n) * pochhammer(-p.N - p.alpha, n) *
            pochhammer(-p.beta - n, n));
}

Rational hahn_weight(long x, const HahnParameterSet& hp) {
    hp.validate();
    if (x < 0 || x > hp.N) {
        throw InvalidParameters("grid point outside 0..N");
    }
    return pochhammer(1 + hp.eta, hp.N) / factorial(hp.N) * pochhammer(Rational(-hp.N), x) *
           pochhammer(1 + hp.xi, x) / (factorial(x) * pochhammer(-hp.eta - hp.N, x));
}

Rational hahn_norm(long n, const HahnParameterSet& hp) {
    hp.validate();
    if (n < 0 || n > hp.N) {
        throw InvalidParameters("degree outside 0..N");
    }
    // (n+xi+eta+1)_{N+1} / (2n+xi+eta+1) with the shared j = n factor removed.
    Rational reduced(1);
    for (long j = 0; j <= hp.N; ++j) {
        if (j == n) continue;
        reduced *= n + hp.xi + hp.eta + 1 + j;
    }
    const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    return sign * reduced * pochhammer(hp.eta + 1, n) * factorial(n) /
           (pochhammer(hp.xi + 1, n) * pochhammer(Rational(-hp.N), n) * factorial(hp.N));
}

GramReport hahn_gram(const HahnParameterSet& hp) {
    hp.validate();
    const long N = hp.N;
    GramReport report;
    report.params = params_json(hp);
    std::vector<GridFunction> H(N + 1, GridFunction(N + 1));
    std::vector<Rational> w(N + 1);
    for (long x = 0; x <= N; ++x) {
        w[x] = hahn_weight(x, hp);
        for (long n = 0; n <= N; ++n) {
            H[n][x] = hahn(n, Rational(x), hp);
        }
    }
    report.gram.assign(N + 1, std::vector<Rational>(N + 1));
    for (long n = 0; n <= N; ++n) {
        report.expected_diag.push_back(hahn_norm(n, hp));
        for (long m = 0; m <= N; ++m) {
            Rational sum(0);
            for (long x = 0; x <= N; ++x) sum += w[x] * H[n][x] * H[m][x];
            report.gram[n][m] = sum;
            const Rational want = n == m ? report.expected_diag[n] : Rational(0);
            if (sum != want) {
                report.violations.push_back({"hahn_gram(" + std::to_string(n) + "," +
                                                 std::to_string(m) + ")",
                                             pair_detail(sum, want)});
            }
        }
        if (report.expected_diag[n] == 0) {
            report.flags.push_back("h^H_" + std::to_string(n) + " = 0");
        }
    }
    return report;
}

IdentityReport check_hahn_bridge(const ParameterSet& p) {
    p.validate();
    IdentityReport report{"hahn_bridge", params_json(p), {}, {}};
    const long N = p.N;

    // prefactor equality (-a-b-N)_N/(-a-N)_N = (a+b+1)_N/(a+1)_N
    {
        const Rational lhs = pochhammer(-p.alpha - p.beta - p.N, N) /
                             pochhammer(-p.alpha - p.N, N);
        const Rational rhs = pochhammer(p.alpha + p.beta + 1, N) /
                             pochhammer(p.alpha + 1, N);
        if (lhs != rhs) report.add("weight_prefactor", pair_detail(lhs, rhs));
    }

    for (long n = 0; n <= N; ++n) {
        const HahnParameterSet hp{-p.beta - n, p.alpha + p.beta, N};
        if (!hp.valid()) {
            report.add("hahn_params(n=" + std::to_string(n) + ")", hp.violation());
            continue;
        }
        for (long x = 0; x <= N; ++x) {
            // H_n(x; -beta-n, alpha+beta) = P_n(x; alpha, beta)
            const Rational h = hahn(n, Rational(x), hp);
            const Rational pv = P(n, Rational(x), p);
            if (h != pv) {
                report.add("Hparam(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           pair_detail(h, pv));
            }
            // w^H under the map against the R_I weight; n = 0 uses the
            // (a)_{-1} = 1/(a-1) convention.
            try {
                const Rational lhs = hahn_weight(x, hp);
                const Rational rhs = pochhammer(p.alpha + 1, N) *
                                     pochhammer_signed(1 + p.beta, n - 1) /
                                     (factorial(N) * pochhammer_signed(1 + p.beta - x, n - 1)) *
                                     weight(x, p);
                if (lhs != rhs) {
                    report.add("wHparam(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                               pair_detail(lhs, rhs));
                }
            } catch (const ZeroDivisor& err) {
                report.add("wHparam(n=" + std::to_string(n) + ",x=" + std::to_string(x) + ")",
                           err.what());
            }
        }
        // moment orthogonality and the closed m = n moment
        for (long m = 0; m < n; ++m) {
            const Rational s = rational_moment_sum(n, m, p);
            if (s != 0) {
                report.add("biorth3(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
                           pair_detail(s, Rational(0)));
            }
        }
        {
            const Rational s = rational_moment_sum(n, n, p);
            const Rational closed = rational_moment_closed(n, p);
            if (s != closed) {
                report.add("renorm4(n=" + std::to_string(n) + ")", pair_detail(s, closed));
            }
        }
        // diagonal assembly: sum_x w V_n P_n through the moment and directly
        GridFunction Pg(N + 1), Vg(N + 1);
        for (long x = 0; x <= N; ++x) {
            Pg[x] = P(n, Rational(x), p);
            Vg[x] = V(n, x, p);
        }
        const Rational direct = scalar_product(Pg, Vg, p);
        const Rational via_moment = pochhammer(Rational(-n), n) *
                                    pochhammer(-p.alpha - p.N, n) /
                                    (pochhammer(Rational(-N), n) * factorial(n)) *
                                    pochhammer(-p.beta - n, n) * rational_moment_sum(n, n, p);
        if (direct != via_moment) {
            report.add("renorm5(n=" + std::to_string(n) + ")", pair_detail(direct, via_moment));
        }
        const Rational hn = normalization_h(n, p);
        if (direct != hn) {
            report.add("renorm6(n=" + std::to_string(n) + ")", pair_detail(direct, hn));
        }
    }
    return report;
}

namespace {

// kappa_n(xi) = (-N)_n (xi+1)_n / (n+xi+eta+1)_n
Rational kappa(long n, const Rational& xi, const Rational& eta, long N) {
    const Rational den = pochhammer(n + xi + eta + 1, n);
    if (den == 0) {
        throw ZeroDivisor("kappa_" + std::to_string(n) + " denominator (n+xi+eta+1)_n vanishes");
    }
    return pochhammer(Rational(-N), n) * pochhammer(xi + 1, n) / den;
}

} // namespace

IdentityReport christoffel_chain_check(long n, const ParameterSet& p) {
    p.validate();
    if (n < 0 || n > p.N - 1) {
        throw InvalidParameters("christoffel chain requires 0 <= n <= N-1");
    }
    const long N = p.N;
    const Rational xi = -p.beta - n;
    const Rational eta = p.alpha + p.beta;
    const HahnParameterSet hp{xi, eta, N};
    const HahnParameterSet hp_shift{xi - 1, eta, N};
    hp.validate();
    hp_shift.validate();

    IdentityReport report{"christoffel_chain(n=" + std::to_string(n) + ")", params_json(p), {}, {}};

    const Rational Hn_at = hahn(n, -xi, hp_shift);
    if (Hn_at == 0) {
        throw ZeroDivisor("H_n(-xi; xi-1, eta, N) = 0");
    }
    const Rational Wn = hahn(n + 1, -xi, hp_shift) / Hn_at;

    // Christoffel transform between xi and xi-1, on the grid
    const Rational chr_factor = kappa(n + 1, xi - 1, eta, N) / kappa(n, xi, eta, N);
    for (long x = 0; x <= N; ++x) {
        const Rational pivot = x + xi;
        if (pivot == 0) {
            throw ZeroDivisor("x + xi = 0 on the grid");
        }
        const Rational lhs = hahn(n, Rational(x), hp);
        const Rational rhs = chr_factor *
                             (hahn(n + 1, Rational(x), hp_shift) -
                              Wn * hahn(n, Rational(x), hp_shift)) /
                             pivot;
        if (lhs != rhs) {
            report.add("Chr(x=" + std::to_string(x) + ")", pair_detail(lhs, rhs));
        }
    }

    // Christoffel-Darboux expansion of the divided difference
    std::vector<Rational> Ynk(n + 1);
    const Rational hn_shift = hahn_norm(n, hp_shift);
    for (long k = 0; k <= n; ++k) {
        const Rational hk = hahn_norm(k, hp_shift);
        if (hk == 0) {
            throw ZeroDivisor("h^H_k(xi-1) = 0 inside the Christoffel-Darboux kernel");
        }
        Ynk[k] = hn_shift * hahn(k, -xi, hp_shift) / (hk * Hn_at);
    }
    const Rational cd_factor = kappa(n, xi - 1, eta, N) / kappa(n + 1, xi - 1, eta, N);
    for (long x = 0; x <= N; ++x) {
        const Rational lhs = (hahn(n + 1, Rational(x), hp_shift) -
                              Wn * hahn(n, Rational(x), hp_shift)) /
                             (x + xi);
        Rational sum(0);
        for (long k = 0; k <= n; ++k) {
            sum += Ynk[k] * hahn(k, Rational(x), hp_shift);
        }
        const Rational rhs = cd_factor * sum;
        if (lhs != rhs) {
            report.add("ChrDar(x=" + std::to_string(x) + ")", pair_detail(lhs, rhs));
        }
    }

    // summed identity: sum_x w^H(xi-1) H_n(x; xi) = kappa ratio * h_n(xi-1)/H_n(-xi)
    {
        Rational lhs(0);
        for (long x = 0; x <= N; ++x) {
            lhs += hahn_weight(x, hp_shift) * hahn(n, Rational(x), hp);
        }
        const Rational rhs = kappa(n, xi - 1, eta, N) / kappa(n, xi, eta, N) * hn_shift / Hn_at;
        if (lhs != rhs) {
            report.add("renorm2", pair_detail(lhs, rhs));
        }
    }

    // mapped closed form H_n(-xi; xi-1) = (-N-alpha)_n / (-N)_n
    {
        const Rational closed = pochhammer(-p.N - p.alpha, n) / pochhammer(Rational(-N), n);
        if (Hn_at != closed) {
            report.add("renorm3", pair_detail(Hn_at, closed));
        }
    }
    return report;
}

} // namespace rihahn
