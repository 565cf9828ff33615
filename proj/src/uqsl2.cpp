#include "ado/uqsl2.hpp"

#include <cmath>

namespace ado {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::E: return "E";
        case Gen::F: return "F";
        case Gen::K: return "K";
        case Gen::Kinv: return "Kinv";
        case Gen::H: return "H";
    }
    return "?";
}

const MatrixC& WeightModule::action(Gen g) const {
    switch (g) {
        case Gen::E: return E;
        case Gen::F: return F;
        case Gen::K: return K;
        case Gen::Kinv: return Kinv;
        case Gen::H: return H;
    }
    return E;  // unreachable
}

namespace {
bool near_int(double x, double eps, long long* out) {
    const double r = std::round(x);
    if (std::abs(x - r) > eps) return false;
    if (out) *out = (long long)(r);
    return true;
}
}  // namespace

bool is_typical(const RootContext& ctx, Cplx lambda) {
    long long r = 0;
    const bool integral =
        std::abs(lambda.imag()) <= ctx.eps_abs && near_int(lambda.real(), ctx.eps_abs, &r);
    if (!integral) return true;
    // integral weights are typical exactly when lambda = -1 + kN
    const long long m = (r + 1) % ctx.N;
    return m == 0;
}

WeightModule typical_module(const RootContext& ctx, Cplx lambda) {
    if (!is_typical(ctx, lambda))
        throw TypicalityError("atypical highest weight: lambda in Z with lambda+1 not divisible by N");
    const int N = ctx.N;
    WeightModule m;
    m.lambda = lambda;
    m.N = N;
    m.E = MatrixC::Zero(N, N);
    m.F = MatrixC::Zero(N, N);
    m.K = MatrixC::Zero(N, N);
    m.Kinv = MatrixC::Zero(N, N);
    m.H = MatrixC::Zero(N, N);
    const Cplx br1 = qbracket(ctx, 1.0);
    for (int i = 0; i < N; ++i) {
        const Cplx w = m.weight(i);
        m.K(i, i) = q_pow(ctx, w);
        m.Kinv(i, i) = q_pow(ctx, -w);
        m.H(i, i) = w;
    }
    for (int i = 0; i + 1 < N; ++i) m.F(i + 1, i) = 1.0;
    for (int i = 1; i < N; ++i)
        m.E(i - 1, i) = (qbracket(ctx, Cplx(i)) / br1) * (qbracket(ctx, lambda - Cplx(i) + 1.0) / br1);
    return m;
}

RelationReport check_relations(const RootContext& ctx, const WeightModule& m) {
    const int N = m.N;
    const MatrixC id = MatrixC::Identity(N, N);
    const Cplx q2 = q_pow(ctx, 2.0);
    const Cplx denom = q_pow(ctx, 1.0) - q_pow(ctx, -1.0);
    RelationReport rep;
    auto add = [&rep](const char* name, const MatrixC& lhs) {
        rep.residuals.emplace_back(name, max_abs(lhs));
    };
    add("HK = KH", m.H * m.K - m.K * m.H);
    add("[H,E] = 2E", m.H * m.E - m.E * m.H - 2.0 * m.E);
    add("[H,F] = -2F", m.H * m.F - m.F * m.H + 2.0 * m.F);
    add("K Kinv = 1", m.K * m.Kinv - id);
    add("K E Kinv = q^2 E", m.K * m.E * m.Kinv - q2 * m.E);
    add("K F Kinv = q^-2 F", m.K * m.F * m.Kinv - m.F / q2);
    add("[E,F] = (K-Kinv)/(q-q^-1)", m.E * m.F - m.F * m.E - (m.K - m.Kinv) / denom);
    MatrixC En = id, Fn = id;
    for (int n = 0; n < N; ++n) { En = En * m.E; Fn = Fn * m.F; }
    add("E^N = 0", En);
    add("F^N = 0", Fn);
    // weight-module condition q^H = K, entrywise on the diagonal
    MatrixC qH = MatrixC::Zero(N, N);
    for (int i = 0; i < N; ++i) qH(i, i) = q_pow(ctx, m.H(i, i));
    add("q^H = K", qH - m.K);
    return rep;
}

double RelationReport::max_residual() const {
    double r = 0.0;
    for (const auto& [name, v] : residuals) r = std::max(r, v);
    return r;
}

MatrixC tensor_action(const RootContext& ctx, std::span<const WeightModule> mods, Gen g) {
    if (mods.empty()) throw SignatureMismatch("tensor_action needs at least one module");
    const int N = ctx.N;
    for (const auto& m : mods)
        if (m.N != N) throw SignatureMismatch("module dimension does not match the context");
    const size_t k = mods.size();

    if (g == Gen::K || g == Gen::Kinv) {
        MatrixC out = MatrixC::Identity(1, 1);
        for (const auto& m : mods) out = kron(out, m.action(g));
        return out;
    }
    long D = 1;
    for (size_t i = 0; i < k; ++i) D *= N;
    MatrixC out = MatrixC::Zero(D, D);
    const MatrixC id = MatrixC::Identity(N, N);
    for (size_t p = 0; p < k; ++p) {
        MatrixC term = MatrixC::Identity(1, 1);
        for (size_t s = 0; s < k; ++s) {
            const MatrixC* f = &id;
            if (s == p) f = &mods[s].action(g);
            else if (g == Gen::E && s > p) f = &mods[s].K;
            else if (g == Gen::F && s < p) f = &mods[s].Kinv;
            term = kron(term, *f);
        }
        out += term;
    }
    return out;
}

MatrixC tensor_action(const RootContext& ctx, std::span<const WeightModule> mods,
                      std::span<const Gen> word) {
    if (mods.empty()) throw SignatureMismatch("tensor_action needs at least one module");
    long D = 1;
    for (size_t i = 0; i < mods.size(); ++i) D *= ctx.N;
    MatrixC out = MatrixC::Identity(D, D);
    for (Gen g : word) out = out * tensor_action(ctx, mods, g);
    return out;
}

MatrixC antipode_action(const WeightModule& m, Gen g) {
    switch (g) {
        case Gen::E: return -(m.E * m.Kinv);
        case Gen::F: return -(m.K * m.F);
        case Gen::K: return m.Kinv;
        case Gen::Kinv: return m.K;
        case Gen::H: return -m.H;
    }
    return m.E;  // unreachable
}

Cplx counit(Gen g) {
    return (g == Gen::K || g == Gen::Kinv) ? Cplx(1.0) : Cplx(0.0);
}

}  // namespace ado
