#include "ado/qscalar.hpp"

#include <cmath>

namespace ado {

namespace {
constexpr double pi = 3.14159265358979323846;

void require_finite(Cplx x, const char* what) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw RangeError(std::string(what) + " must be finite");
}
}  // namespace

RootContext RootContext::make(int N, double eps_abs, double eps_rel) {
    if (N < 2) throw RangeError("root order N must be >= 2, got " + std::to_string(N));
    if (eps_abs < 0 || eps_rel < 0) throw RangeError("tolerances must be nonnegative");
    RootContext ctx{N, std::polar(1.0, pi / double(N)), eps_abs, eps_rel};
    return ctx;
}

Cplx q_pow(const RootContext& ctx, Cplx x) {
    require_finite(x, "q_pow exponent");
    // e^{i pi x / N} = e^{-pi Im(x)/N} (cos + i sin)(pi Re(x)/N)
    const double s = pi / double(ctx.N);
    const Cplx v = std::exp(-s * x.imag()) * std::polar(1.0, s * x.real());
    require_finite(v, "q_pow result (exponent imaginary part overflows)");
    return v;
}

Cplx qbracket(const RootContext& ctx, Cplx a) {
    return q_pow(ctx, a) - q_pow(ctx, -a);
}

Cplx qbracket_factorial(const RootContext& ctx, int n) {
    if (n < 0 || n >= ctx.N)
        throw RangeError("{n}! requires 0 <= n <= N-1, got n = " + std::to_string(n) +
                         " at N = " + std::to_string(ctx.N));
    Cplx p = 1.0;
    for (int m = 1; m <= n; ++m) p *= qbracket(ctx, Cplx(m));
    return p;
}

bool approx_eq(const RootContext& ctx, Cplx a, Cplx b) {
    return std::abs(a - b) <= ctx.tol(std::max(std::abs(a), std::abs(b)));
}

}  // namespace ado
