#include "rihahn/operators.hpp"

#include "rihahn/biorthogonality.hpp"
#include "rihahn/errors.hpp"
#include "rihahn/random.hpp"

namespace rihahn {

DifferenceOperator make_L(const ParameterSet& p) {
    p.validate();
    const long N = p.N;
    const Rational alpha = p.alpha;
    return DifferenceOperator{
        [N](long x) { return Rational(N - x); },
        [](long) { return Rational(0); },
        [N, alpha](long x) { return Rational(x - N - 1) - alpha; },
        N,
    };
}

DifferenceOperator make_M(const ParameterSet& p) {
    p.validate();
    const long N = p.N;
    const Rational alpha = p.alpha;
    const Rational beta = p.beta;
    auto A = [N, beta](long x) { return (N - x) * (x - beta + 1); };
    auto B = [N, alpha, beta](long x) { return x * (alpha + beta + N + 1 - x); };
    return DifferenceOperator{
        A,
        B,
        [A, B](long x) { return Rational(-(A(x) + B(x))); },
        N,
    };
}

DifferenceOperator make_Y(const ParameterSet& p) {
    p.validate();
    const long N = p.N;
    const Rational alpha = p.alpha;
    return DifferenceOperator{
        [N](long x) { return Rational(x * (N - x)); },
        [](long) { return Rational(0); },
        [N, alpha](long x) { return x * (Rational(x - N - 1) - alpha); },
        N,
    };
}

DifferenceOperator make_adjoint_L(const ParameterSet& p) {
    p.validate();
    const long N = p.N;
    const Rational alpha = p.alpha;
    const Rational beta = p.beta;
    return DifferenceOperator{
        [](long) { return Rational(0); },
        [N, alpha, beta](long x) {
            return -x * (1 + alpha + beta + N - x) / (1 + beta - x);
        },
        [N, alpha](long x) { return Rational(x - N - 1) - alpha; },
        N,
    };
}

DifferenceOperator make_adjoint_M(const ParameterSet& p) {
    p.validate();
    const long N = p.N;
    const Rational alpha = p.alpha;
    const Rational beta = p.beta;
    return DifferenceOperator{
        [N, beta](long x) { return (N - x) * (x - beta); },
        [N, alpha, beta](long x) {
            return x * (beta - x) * (1 + alpha + beta + N - x) / (1 + beta - x);
        },
        [N, alpha, beta](long x) {
            return Rational(2 * x * x) - (2 * N + 2 * beta + alpha) * x + (beta - 1) * N;
        },
        N,
    };
}

GridFunction apply_operator(const DifferenceOperator& op, const GridFunction& f) {
    const long N = op.N;
    if (static_cast<long>(f.size()) != N + 1) {
        throw InvalidParameters("grid function has wrong length");
    }
    GridFunction g(N + 1);
    for (long x = 0; x <= N; ++x) {
        Rational value = op.coeff_id(x) * f[x];
        const Rational plus = op.coeff_plus(x);
        if (plus != 0) {
            if (x + 1 > N) {
                throw BoundaryLeak("coeff_plus(N) != 0 addresses x = N+1");
            }
            value += plus * f[x + 1];
        }
        const Rational minus = op.coeff_minus(x);
        if (minus != 0) {
            if (x - 1 < 0) {
                throw BoundaryLeak("coeff_minus(0) != 0 addresses x = -1");
            }
            value += minus * f[x - 1];
        }
        g[x] = value;
    }
    return g;
}

bool adjoint_check(const DifferenceOperator& op,
                   const DifferenceOperator& op_star,
                   const ParameterSet& p,
                   int trials,
                   std::uint64_t seed) {
    RationalSampler sampler(seed);
    for (int t = 0; t < trials; ++t) {
        const GridFunction f = sampler.grid_function(p.N);
        const GridFunction g = sampler.grid_function(p.N);
        const Rational lhs = scalar_product(f, apply_operator(op, g), p);
        const Rational rhs = scalar_product(apply_operator(op_star, f), g, p);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace rihahn
