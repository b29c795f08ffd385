#include "rihahn/basis.hpp"

#include "rihahn/errors.hpp"
#include "rihahn/pochhammer.hpp"

#include <nlohmann/json.hpp>

namespace rihahn {

std::string to_string(BasisTag tag) {
    switch (tag) {
        case BasisTag::phi: return "phi";
        case BasisTag::rho: return "rho";
        case BasisTag::monomial: return "monomial";
    }
    return "?";
}

Rational BasisMatrix::at(long row, long col) const {
    if (row < 0 || col < 0 || row >= order || col >= order) return Rational(0);
    if (row == col) return main_diag[row];
    if (row + 1 == col) return super[row];
    if (row == col + 1) return sub[col];
    return Rational(0);
}

BasisMatrix banded_product(const BasisMatrix& lhs, const BasisMatrix& rhs) {
    if (lhs.order != rhs.order) {
        throw Error("banded product of mismatched orders");
    }
    const long n = lhs.order;
    BasisMatrix out{n, rhs.basis_tag,
                    std::vector<Rational>(n > 0 ? n - 1 : 0, Rational(0)),
                    std::vector<Rational>(n, Rational(0)),
                    std::vector<Rational>(n > 0 ? n - 1 : 0, Rational(0))};
    for (long row = 0; row < n; ++row) {
        for (long col = 0; col < n; ++col) {
            Rational sum(0);
            for (long k = std::max({row - 1, col - 1, 0L});
                 k <= std::min({row + 1, col + 1, n - 1}); ++k) {
                sum += lhs.at(row, k) * rhs.at(k, col);
            }
            if (row == col) {
                out.main_diag[row] = sum;
            } else if (row + 1 == col) {
                out.super[row] = sum;
            } else if (row == col + 1) {
                out.sub[col] = sum;
            } else if (sum != 0) {
                throw Error("banded product leaves the tridiagonal bands");
            }
        }
    }
    return out;
}

std::vector<Rational> banded_apply(const BasisMatrix& m, const std::vector<Rational>& v) {
    if (static_cast<long>(v.size()) != m.order) {
        throw Error("banded apply: size mismatch");
    }
    std::vector<Rational> out(m.order, Rational(0));
    for (long row = 0; row < m.order; ++row) {
        Rational sum = m.main_diag[row] * v[row];
        if (row > 0) sum += m.sub[row - 1] * v[row - 1];
        if (row + 1 < m.order) sum += m.super[row] * v[row + 1];
        out[row] = sum;
    }
    return out;
}

nlohmann::json basis_matrix_to_json(const BasisMatrix& m) {
    auto strings = [](const std::vector<Rational>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Rational& r : v) arr.push_back(to_string(r));
        return arr;
    };
    return nlohmann::json{{"order", m.order},
                          {"basis_tag", to_string(m.basis_tag)},
                          {"sub", strings(m.sub)},
                          {"main", strings(m.main_diag)},
                          {"super", strings(m.super)}};
}

GridFunction phi_basis(long n, long N) {
    GridFunction values(N + 1);
    for (long x = 0; x <= N; ++x) {
        values[x] = pochhammer(Rational(-x), n);
    }
    return values;
}

GridFunction rho_basis(long n, const ParameterSet& p) {
    p.validate();
    GridFunction values(p.N + 1);
    for (long x = 0; x <= p.N; ++x) {
        values[x] = pochhammer(Rational(-x), n) / pochhammer(1 + p.beta - x, n);
    }
    return values;
}

namespace {

// phi_n and rho_n both vanish at x < n, so the grid samples form a lower
// triangular system solvable by forward substitution.
std::vector<Rational> expand_triangular(const GridFunction& f,
                                        const std::function<Rational(long, long)>& basis_at) {
    const long N = static_cast<long>(f.size()) - 1;
    std::vector<Rational> coeffs(N + 1);
    for (long x = 0; x <= N; ++x) {
        Rational residue = f[x];
        for (long n = 0; n < x; ++n) {
            residue -= coeffs[n] * basis_at(n, x);
        }
        coeffs[x] = residue / basis_at(x, x);
    }
    return coeffs;
}

} // namespace

std::vector<Rational> expand_in_phi_basis(const GridFunction& f) {
    return expand_triangular(
        f, [](long n, long x) { return pochhammer(Rational(-x), n); });
}

std::vector<Rational> expand_in_rho_basis(const GridFunction& f, const ParameterSet& p) {
    p.validate();
    const Rational beta = p.beta;
    return expand_triangular(f, [beta](long n, long x) {
        return pochhammer(Rational(-x), n) / pochhammer(1 + beta - x, n);
    });
}

BasisMatrix matrix_in_phi_basis(GridOperator which, const ParameterSet& p) {
    p.validate();
    const long N = p.N;
    const Rational alpha = p.alpha;
    const Rational beta = p.beta;
    auto eta1 = [&](long n) { return -(n + alpha + 1); };
    auto eta2 = [&](long n) { return Rational(n * (n - N - 1)); };
    auto eta3 = [&](long n) { return -n * (n + alpha + 1); };
    auto eta4 = [&](long n) { return n * (n - beta) * (n - N - 1); };
    auto eta5 = [&](long n) { return -n * (2 * n + alpha - N); };
    auto eta6 = [&](long n) { return Rational(n * (n - 1) * (n - N - 1)); };

    BasisMatrix m{N + 1, BasisTag::phi,
                  std::vector<Rational>(N, Rational(0)),
                  std::vector<Rational>(N + 1, Rational(0)),
                  std::vector<Rational>(N, Rational(0))};
    for (long n = 0; n <= N; ++n) {
        switch (which) {
            case GridOperator::L:
                m.main_diag[n] = eta1(n);
                if (n >= 1) m.super[n - 1] = eta2(n);
                break;
            case GridOperator::M:
                m.main_diag[n] = eta3(n);
                if (n >= 1) m.super[n - 1] = eta4(n);
                break;
            case GridOperator::Y:
                m.main_diag[n] = eta5(n);
                if (n >= 1) m.super[n - 1] = eta6(n);
                if (n + 1 <= N) m.sub[n] = -eta1(n);
                break;
        }
    }
    return m;
}

BasisMatrix matrix_in_rho_basis(RhoOperator which, const ParameterSet& p) {
    p.validate();
    const long N = p.N;
    const Rational alpha = p.alpha;
    auto chi1 = [&](long n) { return alpha + N - n; };
    auto chi2 = [&](long n) { return -(1 + alpha + N - n); };
    auto chi3 = [&](long n) { return (alpha + N - n) * (1 + n); };
    auto chi4 = [&](long n) { return Rational(-N * (2 * n + 1)) + n * (Rational(2 * n) - alpha); };
    auto chi5 = [&](long n) { return Rational(n * (1 + N - n)); };

    BasisMatrix m{N + 1, BasisTag::rho,
                  std::vector<Rational>(N, Rational(0)),
                  std::vector<Rational>(N + 1, Rational(0)),
                  std::vector<Rational>(N, Rational(0))};
    for (long n = 0; n <= N; ++n) {
        switch (which) {
            case RhoOperator::Lstar:
                m.main_diag[n] = chi2(n);
                if (n + 1 <= N) m.sub[n] = chi1(n);
                break;
            case RhoOperator::Mstar:
                m.main_diag[n] = chi4(n);
                if (n + 1 <= N) m.sub[n] = chi3(n);
                if (n >= 1) m.super[n - 1] = chi5(n);
                break;
            case RhoOperator::Zstar:
                m.main_diag[n] = Rational(n);
                if (n >= 1) m.super[n - 1] = -n * (1 + N - n) / (1 + alpha + N - n);
                break;
        }
    }
    return m;
}

} // namespace rihahn
