#include "ado/ribbon.hpp"

#include <cmath>
#include <cstdio>

#include <Eigen/LU>

namespace ado {

namespace {
std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}
}  // namespace

long ObjectSignature::dim(int N) const {
    long d = 1;
    for (size_t i = 0; i < colors.size(); ++i) {
        if (d > 100'000'000L / N) throw ResourceError("signature dimension overflow");
        d *= N;
    }
    return d;
}

bool signatures_match(const ObjectSignature& a, const ObjectSignature& b) {
    if (a.colors.size() != b.colors.size()) return false;
    for (size_t i = 0; i < a.colors.size(); ++i)
        if (std::abs(a.colors[i] - b.colors[i]) > 1e-12) return false;
    return true;
}

Morphism identity(const RootContext& ctx, const ObjectSignature& sig) {
    const long d = sig.dim(ctx.N);
    return Morphism{sig, sig, MatrixC::Identity(d, d)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!signatures_match(g.domain, f.codomain))
        throw SignatureMismatch("compose: domain of g does not match codomain of f");
    return Morphism{f.domain, g.codomain, g.matrix * f.matrix};
}

Morphism tensor(const Morphism& f, const Morphism& g) {
    ObjectSignature dom = f.domain, cod = f.codomain;
    dom.colors.insert(dom.colors.end(), g.domain.colors.begin(), g.domain.colors.end());
    cod.colors.insert(cod.colors.end(), g.codomain.colors.begin(), g.codomain.colors.end());
    return Morphism{std::move(dom), std::move(cod), kron(f.matrix, g.matrix)};
}

namespace {

// Coefficient of the n-th term of R_t: {1}^{2n}/{n}! q^{n(n-1)/2}.
Cplx r_coeff(const RootContext& ctx, int n) {
    Cplx c = q_pow(ctx, Cplx(double(n) * double(n - 1) / 2.0));
    const Cplx br1 = qbracket(ctx, 1.0);
    for (int m = 0; m < 2 * n; ++m) c *= br1;
    return c / qbracket_factorial(ctx, n);
}

void require_same_order(const RootContext& ctx, const WeightModule& V, const WeightModule& W) {
    if (V.N != ctx.N || W.N != ctx.N)
        throw SignatureMismatch("modules must share the context's root order N");
}

}  // namespace

Morphism r_matrix(const RootContext& ctx, const WeightModule& V, const WeightModule& W) {
    require_same_order(ctx, V, W);
    const int N = ctx.N;
    MatrixC sum = MatrixC::Zero(N * N, N * N);
    MatrixC En = MatrixC::Identity(N, N), Fn = MatrixC::Identity(N, N);
    for (int n = 0; n < N; ++n) {
        if (n > 0) { En = En * V.E; Fn = Fn * W.F; }
        sum += r_coeff(ctx, n) * kron(En, Fn);
    }
    // Cartan part: scale the (v_i (x) w_j) row by q^{mu mu'/2} with the
    // actual basis-vector weights mu = lambda-2i, mu' = lambda'-2j.
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            sum.row(i * N + j) *= q_pow(ctx, V.weight(i) * W.weight(j) / 2.0);
    ObjectSignature sig{{V.lambda, W.lambda}};
    return Morphism{sig, sig, std::move(sum)};
}

Morphism braiding(const RootContext& ctx, const WeightModule& V, const WeightModule& W) {
    Morphism r = r_matrix(ctx, V, W);
    const int N = ctx.N;
    MatrixC out(N * N, N * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            out.row(j * N + i) = r.matrix.row(i * N + j);
    return Morphism{ObjectSignature{{V.lambda, W.lambda}}, ObjectSignature{{W.lambda, V.lambda}},
                    std::move(out)};
}

Morphism braiding_inv(const RootContext& ctx, const WeightModule& V, const WeightModule& W) {
    Morphism c = braiding(ctx, V, W);
    MatrixC inv = c.matrix.partialPivLu().inverse();
    const double resid = max_abs(inv * c.matrix - MatrixC::Identity(c.matrix.rows(), c.matrix.cols()));
    if (resid > ctx.tol(1.0))
        throw SingularMatrix("braiding inversion residual " + sci(resid));
    return Morphism{c.codomain, c.domain, std::move(inv)};
}

MatrixC twist_action(const RootContext& ctx, std::span<const WeightModule> mods) {
    // theta = u K^{N-1} with u = sum_n c_n S(F^n) q^{-H^2/2} E^n; the Cartan
    // factor acts where E^n has raised the weight by 2n. The categorical
    // twist is theta^{-1}.
    const int N = ctx.N;
    const MatrixC Et = tensor_action(ctx, mods, Gen::E);
    const MatrixC Ft = tensor_action(ctx, mods, Gen::F);
    const MatrixC Kt = tensor_action(ctx, mods, Gen::K);
    const MatrixC Ht = tensor_action(ctx, mods, Gen::H);
    const long D = Et.rows();
    Eigen::VectorXcd cartan(D);
    for (long i = 0; i < D; ++i) cartan(i) = q_pow(ctx, -Ht(i, i) * Ht(i, i) / 2.0);
    const MatrixC SF = -(Kt * Ft);  // S(F) lifted
    MatrixC theta = MatrixC::Zero(D, D);
    MatrixC En = MatrixC::Identity(D, D), SFn = MatrixC::Identity(D, D);
    for (int n = 0; n < N; ++n) {
        if (n > 0) { En = En * Et; SFn = SFn * SF; }
        theta += r_coeff(ctx, n) * (SFn * (cartan.asDiagonal() * En));
    }
    MatrixC Kpow = MatrixC::Identity(D, D);
    for (int m = 0; m < N - 1; ++m) Kpow = Kpow * Kt;
    theta = theta * Kpow;
    MatrixC inv = theta.partialPivLu().inverse();
    const double resid = max_abs(inv * theta - MatrixC::Identity(D, D));
    if (resid > ctx.tol(1.0))
        throw SingularMatrix("twist inversion residual " + sci(resid));
    return inv;
}

Cplx twist_scalar(const RootContext& ctx, const WeightModule& V) {
    const MatrixC t = twist_action(ctx, std::span<const WeightModule>(&V, 1));
    double resid = 0.0;
    const Cplx s = extract_scalar(t, &resid);
    if (resid > ctx.tol(std::abs(s)))
        throw SimplicityError("twist does not act as a scalar, residual " + sci(resid));
    return s;
}

MatrixC coev(const RootContext& ctx, const WeightModule&) {
    const int N = ctx.N;
    MatrixC b = MatrixC::Zero(N * N, 1);
    for (int i = 0; i < N; ++i) b(i * N + i, 0) = 1.0;
    return b;
}

MatrixC ev(const RootContext& ctx, const WeightModule&) {
    const int N = ctx.N;
    MatrixC d = MatrixC::Zero(1, N * N);
    for (int i = 0; i < N; ++i) d(0, i * N + i) = 1.0;
    return d;
}

MatrixC coev_prime(const RootContext& ctx, const WeightModule& V) {
    const int N = ctx.N;
    MatrixC b = MatrixC::Zero(N * N, 1);
    for (int i = 0; i < N; ++i) b(i * N + i, 0) = q_pow(ctx, double(N - 1) * V.weight(i));
    return b;
}

MatrixC ev_prime(const RootContext& ctx, const WeightModule& V) {
    const int N = ctx.N;
    MatrixC d = MatrixC::Zero(1, N * N);
    for (int i = 0; i < N; ++i) d(0, i * N + i) = q_pow(ctx, double(1 - N) * V.weight(i));
    return d;
}

namespace {

void require_shape(const RootContext& ctx, const Morphism& f, const char* where) {
    if (f.matrix.rows() != f.codomain.dim(ctx.N) || f.matrix.cols() != f.domain.dim(ctx.N))
        throw SignatureMismatch(std::string(where) + ": matrix shape does not match signatures");
}

}  // namespace

Morphism partial_trace_right(const RootContext& ctx, const Morphism& f, int strands) {
    if (strands < 0 || strands > std::min(f.domain.size(), f.codomain.size()))
        throw SignatureMismatch("partial_trace_right: strand count out of range");
    if (strands != 1) {
        Morphism cur = f;
        for (int s = 0; s < strands; ++s) cur = partial_trace_right(ctx, cur);
        return cur;
    }
    require_shape(ctx, f, "partial_trace_right");
    const Cplx z = f.domain.colors.back();
    if (std::abs(z - f.codomain.colors.back()) > 1e-12)
        throw SignatureMismatch("partial_trace_right: last strand colors differ");
    const int N = ctx.N;
    const long rows = f.matrix.rows() / N, cols = f.matrix.cols() / N;
    MatrixC out = MatrixC::Zero(rows, cols);
    for (int j = 0; j < N; ++j) {
        const Cplx piv = q_pow(ctx, double(1 - N) * (z - 2.0 * double(j)));
        for (long x = 0; x < rows; ++x)
            for (long y = 0; y < cols; ++y) out(x, y) += piv * f.matrix(x * N + j, y * N + j);
    }
    ObjectSignature dom{std::vector<Cplx>(f.domain.colors.begin(), f.domain.colors.end() - 1)};
    ObjectSignature cod{std::vector<Cplx>(f.codomain.colors.begin(), f.codomain.colors.end() - 1)};
    return Morphism{std::move(dom), std::move(cod), std::move(out)};
}

Morphism partial_trace_left(const RootContext& ctx, const Morphism& f, int strands) {
    if (strands < 0 || strands > std::min(f.domain.size(), f.codomain.size()))
        throw SignatureMismatch("partial_trace_left: strand count out of range");
    if (strands != 1) {
        Morphism cur = f;
        for (int s = 0; s < strands; ++s) cur = partial_trace_left(ctx, cur);
        return cur;
    }
    require_shape(ctx, f, "partial_trace_left");
    const Cplx z = f.domain.colors.front();
    if (std::abs(z - f.codomain.colors.front()) > 1e-12)
        throw SignatureMismatch("partial_trace_left: first strand colors differ");
    const int N = ctx.N;
    const long rows = f.matrix.rows() / N, cols = f.matrix.cols() / N;
    MatrixC out = MatrixC::Zero(rows, cols);
    for (int i = 0; i < N; ++i) {
        const Cplx piv = q_pow(ctx, double(N - 1) * (z - 2.0 * double(i)));
        out += piv * f.matrix.block(i * rows, i * cols, rows, cols);
    }
    ObjectSignature dom{std::vector<Cplx>(f.domain.colors.begin() + 1, f.domain.colors.end())};
    ObjectSignature cod{std::vector<Cplx>(f.codomain.colors.begin() + 1, f.codomain.colors.end())};
    return Morphism{std::move(dom), std::move(cod), std::move(out)};
}

Cplx quantum_trace(const RootContext& ctx, const Morphism& f) {
    if (!signatures_match(f.domain, f.codomain))
        throw SignatureMismatch("quantum_trace needs an endomorphism");
    Morphism cur = f;
    while (cur.domain.size() > 0) cur = partial_trace_right(ctx, cur);
    return cur.matrix(0, 0);
}

}  // namespace ado
