#pragma once

#include <span>
#include <string>
#include <vector>

#include "ado/matrix.hpp"
#include "ado/qscalar.hpp"

namespace ado {

// Generators of the restricted quantum sl2.
enum class Gen { E, F, K, Kinv, H };

const char* gen_name(Gen g);

// The N-dimensional typical weight module V_lambda on the basis v_0..v_{N-1},
// v_i of weight lambda - 2i. Immutable after construction.
struct WeightModule {
    Cplx lambda;
    int N;
    MatrixC E, F, K, Kinv, H;

    Cplx weight(int i) const { return lambda - 2.0 * double(i); }
    const MatrixC& action(Gen g) const;
};

// Typicality: lambda in (C \ Z) u {-1 + kN}. Integrality is tested within
// eps_abs on both real and imaginary parts, so colors within eps_abs of an
// excluded integer are rejected (they would sit on a pole downstream).
bool is_typical(const RootContext& ctx, Cplx lambda);

// Builds V_lambda with F v_i = v_{i+1}, E v_i = [i][lambda-i+1] v_{i-1},
// K v_i = q^{lambda-2i} v_i. Throws TypicalityError for atypical lambda.
WeightModule typical_module(const RootContext& ctx, Cplx lambda);

// Max-norm residuals of the defining relations, evaluated as matrix
// identities on a given module. Reports; never throws.
struct RelationReport {
    std::vector<std::pair<std::string, double>> residuals;
    double max_residual() const;
};

RelationReport check_relations(const RootContext& ctx, const WeightModule& m);

// Action of a single generator on V_1 (x) ... (x) V_k through the iterated
// coproduct:
//   E -> sum_p 1 x..x E_(p) x K x..x K      F -> sum_p K^-1 x..x F_(p) x 1 x..x 1
//   K -> K x...x K (Kinv likewise)          H -> sum_p 1 x..x H_(p) x..x 1
MatrixC tensor_action(const RootContext& ctx, std::span<const WeightModule> mods, Gen g);

// Action of the product word[0]*word[1]*... (operator product in word order).
MatrixC tensor_action(const RootContext& ctx, std::span<const WeightModule> mods,
                      std::span<const Gen> word);

// Antipode on generators, as an operator on the module:
// S(E) = -E K^-1, S(F) = -K F, S(K) = K^-1, S(K^-1) = K, S(H) = -H.
MatrixC antipode_action(const WeightModule& m, Gen g);

// Counit: 0 on E, F, H; 1 on K, K^-1.
Cplx counit(Gen g);

}  // namespace ado
