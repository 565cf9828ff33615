#pragma once

#include <span>
#include <vector>

#include "ado/uqsl2.hpp"

namespace ado {

// Ordered list of highest weights, all strands upward-oriented. The empty
// list is the unit object. Dual objects never appear here: the duality maps
// below contract their dual index immediately.
struct ObjectSignature {
    std::vector<Cplx> colors;

    int size() const { return int(colors.size()); }
    long dim(int N) const;  // N^size, guarded against overflow
};

bool signatures_match(const ObjectSignature& a, const ObjectSignature& b);

// A morphism between tensor products of typical modules: a dense matrix of
// shape N^{|codomain|} x N^{|domain|}, first tensor factor most significant.
struct Morphism {
    ObjectSignature domain;
    ObjectSignature codomain;
    MatrixC matrix;
};

Morphism identity(const RootContext& ctx, const ObjectSignature& sig);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism tensor(const Morphism& f, const Morphism& g);

// The R-matrix on V (x) W:
//   R_t = q^{H(x)H/2} sum_{n=0}^{N-1} ({1}^{2n}/{n}!) q^{n(n-1)/2} E^n (x) F^n
// where q^{H(x)H/2} scales the (v_i (x) w_j) component by q^{mu mu'/2} with
// mu = lambda-2i, mu' = lambda'-2j the actual basis-vector weights.
Morphism r_matrix(const RootContext& ctx, const WeightModule& V, const WeightModule& W);

// Braiding c_{V,W} = flip o R_t : V (x) W -> W (x) V, and its two-sided
// inverse (numeric; throws SingularMatrix if the inversion residual exceeds
// tolerance, which cannot happen for valid inputs).
Morphism braiding(const RootContext& ctx, const WeightModule& V, const WeightModule& W);
Morphism braiding_inv(const RootContext& ctx, const WeightModule& V, const WeightModule& W);

// The scalar by which the categorical twist theta_V acts (v -> theta^{-1} v,
// with theta = u K^{N-1}). For typical V this equals q^{lambda^2/2-(N-1)lambda};
// the full matrix is computed and checked to be scalar (SimplicityError if not).
Cplx twist_scalar(const RootContext& ctx, const WeightModule& V);

// Matrix of the categorical twist on V_1 (x) ... (x) V_k. The Drinfeld
// element is evaluated term by term as sum_n c_n S(F^n) q^{-H^2/2} E^n with
// the Cartan factor acting at the weight raised by E^n; on a single module
// this reproduces twist_scalar * Id.
MatrixC twist_action(const RootContext& ctx, std::span<const WeightModule> mods);

// The four duality morphisms as raw matrices; the dual basis index is the
// second slot of coev/ev_prime and the first slot of ev/coev_prime, and is
// always contracted immediately by the caller.
//   coev       b_V  : 1 -> V (x) V*,  sum_i v_i (x) v_i*             (N^2 x 1)
//   ev         d_V  : V* (x) V -> 1,  f (x) w -> f(w)                (1 x N^2)
//   coev_prime b'_V : 1 -> V* (x) V,  sum_i v_i* (x) K^{N-1} v_i     (N^2 x 1)
//   ev_prime   d'_V : V (x) V* -> 1,  v (x) f -> f(K^{1-N} v)        (1 x N^2)
MatrixC coev(const RootContext& ctx, const WeightModule& V);
MatrixC ev(const RootContext& ctx, const WeightModule& V);
MatrixC coev_prime(const RootContext& ctx, const WeightModule& V);
MatrixC ev_prime(const RootContext& ctx, const WeightModule& V);

// Partial pivotal traces. For f : X (x) Z -> Y (x) Z (Z a single strand),
//   (tr_R f)_{x,y} = sum_j (K^{1-N})_{jj} f_{(x,j),(y,j)}
// and for f : X (x) Y -> X (x) Z,
//   (tr_L f)_{z,y} = sum_i (K^{N-1})_{ii} f_{(i,z),(i,y)}.
// A tensor word of `strands` factors is traced iteratively, rightmost
// (resp. leftmost) first.
Morphism partial_trace_right(const RootContext& ctx, const Morphism& f, int strands = 1);
Morphism partial_trace_left(const RootContext& ctx, const Morphism& f, int strands = 1);

// Quantum trace of an endomorphism: iterated tr_R down to the unit object.
// For a single strand this is tr(K^{1-N} f).
Cplx quantum_trace(const RootContext& ctx, const Morphism& f);

}  // namespace ado
