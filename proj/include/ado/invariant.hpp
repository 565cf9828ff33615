#pragma once

#include "ado/tangle.hpp"

namespace ado {

// Scalar s with m = s * Id on a single typical strand. Throws SimplicityError
// if off-diagonal max or diagonal spread exceeds eps_abs + eps_rel * |s|.
Cplx scalar_of_endo(const RootContext& ctx, const Morphism& m);

// <T_V> for the (1,1)-tangle obtained by cutting the closure arc of `strand`:
// all other positions are closed with their pivot insertion, K^{N-1} for
// positions left of the cut (tr_L) and K^{1-N} for positions right of it
// (tr_R), then the scalar of the resulting endomorphism of V_{color(strand)}
// is extracted. The split pivot rule is certified by the cut-independence and
// formula-vs-diagram suites.
Cplx cut_value(const RootContext& ctx, const ColoredLink& link, int strand);

// Same, reusing an already compiled morphism for the link.
Cplx cut_value(const RootContext& ctx, const ColoredLink& link, const Morphism& compiled,
               int strand);

// Modified quantum dimension d(V_lambda) = 1 / prod_{j=0}^{N-2} {lambda+N-j}.
// Closed-form and reference-free; throws PoleError if a factor is numerically
// zero (cannot happen for typical lambda).
Cplx modified_dim(const RootContext& ctx, Cplx lambda);

// S'(V_lambda, V_lambda') = q^{(lambda+1-N)(lambda'+1-N)} {Nx}/{x} with
// x = lambda'+1-N; the first argument colors the loop, the second the open
// strand. {Nx}/{x} is evaluated as the Laurent polynomial
// sum_{m=0}^{N-1} q^{(N-1-2m)x}, so integral typical lambda' (the 0/0 case)
// is handled exactly. Throws TypicalityError if lambda is atypical.
Cplx s_prime_formula(const RootContext& ctx, Cplx lambda, Cplx lambda_prime);

// dim_C(V_lambda) evaluated as the closed diagram d' o b; vanishes for every
// typical lambda.
Cplx qdim_via_diagram(const RootContext& ctx, Cplx lambda);

struct CutEntry {
    int component;       // 0-based component index
    int strand;          // 0-based strand position that was cut
    Cplx tangle_scalar;  // <T_V>
    Cplx mdim;           // d(V)
    Cplx product;        // d(V) <T_V>
};

struct InvariantReport {
    Cplx value;  // mean of the per-cut products
    std::vector<CutEntry> per_cut;
    double max_disagreement;  // max pairwise distance between products
};

// F'(L): cuts one representative strand of every component plus every strand
// of the first component, checks that all products d(V)<T_V> agree
// (DisagreementError beyond 10x the composite tolerance — a violation would
// mean cut dependence, i.e. a bug) and reports their mean.
InvariantReport f_prime(const RootContext& ctx, const ColoredLink& link);

struct AmbidextrousReport {
    int commutant_dimension;           // dim End(J0 (x) J0), expected N
    double trace_diff_residual;        // max ||tr_L(f) - tr_R(f)|| over the basis
    double full_trace_residual;        // max |tr_C tr_L(f) - tr_C tr_R(f)|
    double braiding_commute_residual;  // max ||[c_{J0,J0}, f]||
};

// Computes a basis of End(J0 (x) J0) as the null space of the commutation
// constraints with the lifted E, F, K, H, then measures ambidexterity on it.
// Requires lambda0 outside (1/2)Z (GenericityError otherwise).
AmbidextrousReport ambidextrous_check(const RootContext& ctx, Cplx lambda0);

}  // namespace ado
