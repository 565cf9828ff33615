#include "ado/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/SVD>

namespace ado {

namespace {
std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}
}  // namespace

Cplx scalar_of_endo(const RootContext& ctx, const Morphism& m) {
    if (!signatures_match(m.domain, m.codomain) || m.domain.size() != 1 ||
        m.matrix.rows() != ctx.N || m.matrix.cols() != ctx.N)
        throw SignatureMismatch("scalar_of_endo expects an endomorphism of a single strand");
    double resid = 0.0;
    const Cplx s = extract_scalar(m.matrix, &resid);
    if (resid > ctx.tol(std::abs(s)))
        throw SimplicityError("endomorphism is not scalar: residual " + sci(resid) +
                              " exceeds tolerance " + sci(ctx.tol(std::abs(s))));
    return s;
}

Cplx cut_value(const RootContext& ctx, const ColoredLink& link, const Morphism& compiled,
               int strand) {
    if (strand < 0 || strand >= link.braid.strands)
        throw SignatureMismatch("cut strand out of range");
    if (!signatures_match(compiled.domain, compiled.codomain))
        throw SignatureMismatch("closure requires per-component colors (compiled morphism "
                                "is not an endomorphism)");
    // Close every position except the cut one: right of the cut via tr_R
    // (pivot K^{1-N}), left of it via tr_L (pivot K^{N-1}).
    const Morphism right = partial_trace_right(ctx, compiled, link.braid.strands - 1 - strand);
    return scalar_of_endo(ctx, partial_trace_left(ctx, right, strand));
}

Cplx cut_value(const RootContext& ctx, const ColoredLink& link, int strand) {
    return cut_value(ctx, link, compile(ctx, link), strand);
}

Cplx modified_dim(const RootContext& ctx, Cplx lambda) {
    if (!is_typical(ctx, lambda)) throw TypicalityError("modified_dim requires a typical weight");
    Cplx prod = 1.0;
    for (int j = 0; j <= ctx.N - 2; ++j) {
        const Cplx factor = qbracket(ctx, lambda + double(ctx.N - j));
        if (std::abs(factor) < ctx.eps_abs)
            throw PoleError("bracket factor {lambda+N-j} vanished at j = " + std::to_string(j));
        prod *= factor;
    }
    return 1.0 / prod;
}

Cplx s_prime_formula(const RootContext& ctx, Cplx lambda, Cplx lambda_prime) {
    if (!is_typical(ctx, lambda)) throw TypicalityError("S' requires a typical loop color");
    const Cplx x = lambda_prime + 1.0 - double(ctx.N);
    // {Nx}/{x} as a Laurent polynomial in q^x; exact at the 0/0 points.
    Cplx ratio = 0.0;
    for (int m = 0; m < ctx.N; ++m) ratio += q_pow(ctx, double(ctx.N - 1 - 2 * m) * x);
    return q_pow(ctx, (lambda + 1.0 - double(ctx.N)) * x) * ratio;
}

Cplx qdim_via_diagram(const RootContext& ctx, Cplx lambda) {
    const WeightModule V = typical_module(ctx, lambda);
    return (ev_prime(ctx, V) * coev(ctx, V))(0, 0);
}

InvariantReport f_prime(const RootContext& ctx, const ColoredLink& link) {
    const Morphism compiled = compile(ctx, link);

    // One representative strand per component, plus every strand of the first.
    std::vector<std::pair<int, int>> cuts;  // (component, strand)
    for (size_t c = 0; c < link.components.size(); ++c)
        cuts.emplace_back(int(c), link.components[c].front());
    for (const int s : link.components.front())
        if (s != link.components.front().front()) cuts.emplace_back(0, s);
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });

    InvariantReport rep;
    rep.max_disagreement = 0.0;
    double scale = 0.0;
    Cplx mean = 0.0;
    for (const auto& [comp, strand] : cuts) {
        CutEntry e;
        e.component = comp;
        e.strand = strand;
        e.tangle_scalar = cut_value(ctx, link, compiled, strand);
        e.mdim = modified_dim(ctx, link.colors[size_t(comp)]);
        e.product = e.mdim * e.tangle_scalar;
        scale = std::max(scale, std::abs(e.product));
        mean += e.product;
        rep.per_cut.push_back(e);
    }
    mean /= double(rep.per_cut.size());
    rep.value = mean;
    for (size_t a = 0; a < rep.per_cut.size(); ++a)
        for (size_t b = a + 1; b < rep.per_cut.size(); ++b)
            rep.max_disagreement = std::max(
                rep.max_disagreement, std::abs(rep.per_cut[a].product - rep.per_cut[b].product));
    // Different cuts accumulate different rounding paths; 10x the composite
    // tolerance separates that from a genuine well-definedness violation.
    if (rep.max_disagreement > 10.0 * ctx.tol(scale))
        throw DisagreementError("per-cut values of F' disagree by " + sci(rep.max_disagreement) +
                                " (tolerance " + sci(10.0 * ctx.tol(scale)) + ")");
    return rep;
}

AmbidextrousReport ambidextrous_check(const RootContext& ctx, Cplx lambda0) {
    const Cplx twice = 2.0 * lambda0;
    if (std::abs(twice.imag()) <= ctx.eps_abs &&
        std::abs(twice.real() - std::round(twice.real())) <= ctx.eps_abs)
        throw GenericityError("ambidextrous reference weight must lie outside (1/2)Z");

    const WeightModule J = typical_module(ctx, lambda0);
    const std::vector<WeightModule> pair{J, J};
    const int N = ctx.N;
    const long D = long(N) * N;

    // End(J (x) J) = joint commutant of the lifted generator actions,
    // computed as an SVD null space of the stacked commutation constraints.
    const Gen gens[] = {Gen::E, Gen::F, Gen::K, Gen::H};
    MatrixC A(4 * D * D, D * D);
    const MatrixC id = MatrixC::Identity(D, D);
    for (int gi = 0; gi < 4; ++gi) {
        const MatrixC G = tensor_action(ctx, pair, gens[gi]);
        const double norm = std::max(1.0, max_abs(G));
        A.block(gi * D * D, 0, D * D, D * D) =
            (kron(id, G) - kron(G.transpose(), id)) / norm;
    }
    Eigen::BDCSVD<MatrixC> svd(A, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    int dim = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) < 1e-7 * sv(0)) ++dim;

    AmbidextrousReport rep{dim, 0.0, 0.0, 0.0};
    const Morphism c = braiding(ctx, J, J);
    const ObjectSignature sig{{lambda0, lambda0}};
    for (int b = 0; b < dim; ++b) {
        const Eigen::VectorXcd v = svd.matrixV().col(sv.size() - 1 - b);
        const MatrixC f = Eigen::Map<const MatrixC>(v.data(), D, D);
        const Morphism fm{sig, sig, f};
        const Morphism trL = partial_trace_left(ctx, fm);
        const Morphism trR = partial_trace_right(ctx, fm);
        rep.trace_diff_residual =
            std::max(rep.trace_diff_residual, max_abs(trL.matrix - trR.matrix));
        rep.full_trace_residual =
            std::max(rep.full_trace_residual,
                     std::abs(quantum_trace(ctx, trL) - quantum_trace(ctx, trR)));
        rep.braiding_commute_residual =
            std::max(rep.braiding_commute_residual, max_abs(c.matrix * f - f * c.matrix));
    }
    return rep;
}

}  // namespace ado
