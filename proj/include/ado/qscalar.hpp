#pragma once

#include <complex>

#include "ado/errors.hpp"

namespace ado {

using Cplx = std::complex<double>;

// Root-of-unity context: order parameter N >= 2, q = e^{i pi / N} (a
// primitive 2N-th root of unity), and the tolerances every comparison in the
// library goes through.
struct RootContext {
    int N;
    Cplx q;
    double eps_abs;
    double eps_rel;

    static RootContext make(int N, double eps_abs = 1e-9, double eps_rel = 1e-9);

    // eps_abs + eps_rel * scale, the composite tolerance at a given magnitude.
    double tol(double scale) const { return eps_abs + eps_rel * scale; }
};

// q^x = e^{i pi x / N}, taken literally (never via log q), so complex
// exponents carry no branch ambiguity.
Cplx q_pow(const RootContext& ctx, Cplx x);

// {a} = q^a - q^{-a}; equals 2i sin(pi a / N) for real a.
Cplx qbracket(const RootContext& ctx, Cplx a);

// {n}! = {n}{n-1}...{1}, with {0}! = 1 (empty product). Throws RangeError
// unless 0 <= n <= N-1: {N} = 0 so larger n would silently zero out, which is
// never wanted and usually means an index bug.
Cplx qbracket_factorial(const RootContext& ctx, int n);

// |a - b| <= eps_abs + eps_rel * max(|a|, |b|).
bool approx_eq(const RootContext& ctx, Cplx a, Cplx b);

}  // namespace ado
