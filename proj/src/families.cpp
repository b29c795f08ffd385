#include "rihahn/families.hpp"

#include "rihahn/errors.hpp"
#include "rihahn/hypergeometric.hpp"
#include "rihahn/pochhammer.hpp"

#include <array>
#include <ostream>

namespace rihahn {

Rational P(long n, const Rational& x, const ParameterSet& p) {
    p.validate();
    if (n < 0 || n > p.N) {
        throw InvalidParameters("degree n outside 0..N");
    }
    const std::array<Rational, 3> num{Rational(-n), -x, p.alpha + 1};
    const std::array<Rational, 2> den{Rational(-p.N), 1 - p.beta - n};
    return hyp_terminating(num, den, Rational(1));
}

Rational V(long n, long x, const ParameterSet& p) {
    p.validate();
    if (n < 0 || n > p.N || x < 0 || x > p.N) {
        throw InvalidParameters("index outside 0..N");
    }
    const std::array<Rational, 3> num{Rational(-n), Rational(-x), -p.alpha - p.N};
    const std::array<Rational, 2> den{Rational(-p.N), 1 + p.beta - x};
    return hyp_terminating(num, den, Rational(1));
}

Rational hahn(long n, const Rational& x, const HahnParameterSet& hp) {
    hp.validate();
    if (n < 0 || n > hp.N) {
        throw InvalidParameters("degree n outside 0..N");
    }
    const std::array<Rational, 3> num{Rational(-n), -x, n + hp.xi + hp.eta + 1};
    const std::array<Rational, 2> den{Rational(-hp.N), hp.xi + 1};
    return hyp_terminating(num, den, Rational(1));
}

Rational monic_mu(long n, const ParameterSet& p) {
    p.validate();
    return pochhammer(Rational(-p.N), n) * pochhammer(1 - p.beta - n, n) /
           pochhammer(p.alpha + 1, n);
}

Rational monic_p(long n, const Rational& x, const ParameterSet& p) {
    return monic_mu(n, p) * P(n, x, p);
}

Rational askey_P(long n, const Rational& x, const Rational& alpha, const Rational& beta) {
    const std::array<Rational, 2> num{Rational(-n), alpha + 1};
    const std::array<Rational, 1> den{1 - beta - n};
    return hyp_terminating(num, den, x);
}

std::vector<Rational> expand_in_rational_monomials(const std::vector<Rational>& f,
                                                   long n,
                                                   const ParameterSet& p) {
    p.validate();
    if (n < 0 || n > p.N || static_cast<long>(f.size()) != p.N + 1) {
        throw InvalidParameters("expansion order outside 0..N or bad grid length");
    }
    // Gaussian elimination on the (n+1)x(n+1) system over samples x = 0..n.
    const long m = n + 1;
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (long x = 0; x < m; ++x) {
        for (long k = 0; k < m; ++k) {
            a[x][k] = 1 / pochhammer(1 + p.beta - x, k);
        }
        a[x][m] = f[x];
    }
    for (long col = 0; col < m; ++col) {
        long pivot = col;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) {
            throw Error("singular rational-monomial system");
        }
        std::swap(a[col], a[pivot]);
        for (long row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (long k = col; k <= m; ++k) {
                a[row][k] -= factor * a[col][k];
            }
        }
    }
    std::vector<Rational> u(m);
    for (long k = 0; k < m; ++k) {
        u[k] = a[k][m] / a[k][k];
    }
    return u;
}

std::vector<Rational> expand_V_in_rational_monomials(long n, const ParameterSet& p) {
    std::vector<Rational> values(p.N + 1);
    for (long x = 0; x <= p.N; ++x) {
        values[x] = V(n, x, p);
    }
    return expand_in_rational_monomials(values, n, p);
}

void FamilyTable::write_csv(std::ostream& out) const {
    out << "n\\x";
    const std::size_t width = values.empty() ? 0 : values.front().size();
    for (std::size_t x = 0; x < width; ++x) out << "," << x;
    out << "\n";
    for (std::size_t n = 0; n < values.size(); ++n) {
        out << n;
        for (const Rational& v : values[n]) out << "," << to_string(v);
        out << "\n";
    }
}

FamilyTable tabulate(Family which, const ParameterSet& p) {
    p.validate();
    FamilyTable table;
    table.values.assign(p.N + 1, std::vector<Rational>(p.N + 1));
    for (long n = 0; n <= p.N; ++n) {
        for (long x = 0; x <= p.N; ++x) {
            switch (which) {
                case Family::P:
                    table.family = "P";
                    table.values[n][x] = P(n, Rational(x), p);
                    break;
                case Family::V:
                    table.family = "V";
                    table.values[n][x] = V(n, x, p);
                    break;
                case Family::Monic:
                    table.family = "monic";
                    table.values[n][x] = monic_p(n, Rational(x), p);
                    break;
                case Family::Hahn:
                    throw InvalidParameters("hahn tabulation needs a HahnParameterSet");
            }
        }
    }
    return table;
}

FamilyTable tabulate_hahn(const HahnParameterSet& hp) {
    hp.validate();
    FamilyTable table;
    table.family = "hahn";
    table.values.assign(hp.N + 1, std::vector<Rational>(hp.N + 1));
    for (long n = 0; n <= hp.N; ++n) {
        for (long x = 0; x <= hp.N; ++x) {
            table.values[n][x] = hahn(n, Rational(x), hp);
        }
    }
    return table;
}

} // namespace rihahn
