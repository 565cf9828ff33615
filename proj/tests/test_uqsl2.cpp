#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "ado/uqsl2.hpp"
#include "ado/verify.hpp"
#include "test_support.hpp"

using namespace ado;
using ado::test::cdist;

TEST_CASE("typicality follows the weight set (C \\ Z) u {-1 + kN}") {
    const RootContext c3 = RootContext::make(3);
    CHECK(is_typical(c3, Cplx(-1.0)));
    CHECK(is_typical(c3, Cplx(2.0)));   // 2 = -1 + 3
    CHECK(is_typical(c3, Cplx(5.0)));
    CHECK(is_typical(c3, Cplx(-4.0)));
    CHECK_FALSE(is_typical(c3, Cplx(0.0)));
    CHECK_FALSE(is_typical(c3, Cplx(1.0)));
    CHECK_FALSE(is_typical(c3, Cplx(3.0)));
    CHECK(is_typical(c3, Cplx(0.5)));
    CHECK(is_typical(c3, Cplx(1.0, 0.3)));
    // near-integer rejection within eps_abs
    CHECK_FALSE(is_typical(c3, Cplx(1.0 + 1e-12)));
    CHECK(is_typical(c3, Cplx(1.0 + 1e-6)));
}

TEST_CASE("typical_module highest weight and nilpotency structure") {
    const RootContext c2 = RootContext::make(2);
    const WeightModule m2 = typical_module(c2, Cplx(0.5));
    CHECK(max_abs(m2.E.col(0)) == 0.0);  // E v_0 = 0

    const RootContext c3 = RootContext::make(3);
    const WeightModule m3 = typical_module(c3, Cplx(0.7, 0.2));
    CHECK(max_abs(m3.F.col(2)) == 0.0);  // F v_{N-1} = 0

    CHECK_THROWS_AS(typical_module(c3, Cplx(1.0)), TypicalityError);
}

TEST_CASE("[E,F] acts on v_1 by the bracket of the weight below the top") {
    const RootContext c3 = RootContext::make(3);
    const WeightModule m = typical_module(c3, Cplx(0.4));
    const MatrixC comm = m.E * m.F - m.F * m.E;
    // frozen oracle: (q^{lambda-2} - q^{2-lambda})/(q - q^{-1}) at lambda = 0.4
    CHECK(cdist(comm(1, 1), Cplx(-1.1483749680116988797, 0.0)) < 1e-14);
    CHECK(cdist(comm(1, 0), 0.0) < 1e-15);
}

TEST_CASE("check_relations validates construction and flags corruption") {
    const RootContext c2 = RootContext::make(2);
    const WeightModule good = typical_module(c2, Cplx(0.5));
    CHECK(check_relations(c2, good).max_residual() <= 1e-9);

    WeightModule bad = good;
    bad.E.setZero();
    double ef = 0.0;
    for (const auto& [name, r] : check_relations(c2, bad).residuals)
        if (name.find("[E,F]") != std::string::npos) ef = r;
    CHECK(ef > 0.1);

    const RootContext c5 = RootContext::make(5);
    CHECK(check_relations(c5, typical_module(c5, Cplx(3.14159265358979))).max_residual() <= 1e-9);
}

TEST_CASE("relations hold for random typical weights at every N in 2..5") {
    auto gen = ado::test::rng(11);
    for (int N : {2, 3, 4, 5}) {
        const RootContext ctx = RootContext::make(N);
        for (int t = 0; t < 20; ++t) {
            const WeightModule m = typical_module(ctx, verify::random_typical(gen));
            CHECK(check_relations(ctx, m).max_residual() <= 1e-9);
        }
    }
}

TEST_CASE("tensor_action on highest weights and weight additivity") {
    const RootContext c3 = RootContext::make(3);
    const Cplx la(0.3, 0.1), lb(0.8, -0.2);
    const std::vector<WeightModule> mods{typical_module(c3, la), typical_module(c3, lb)};

    const MatrixC K = tensor_action(c3, mods, Gen::K);
    CHECK(cdist(K(0, 0), q_pow(c3, la + lb)) < 1e-14);  // Delta(K) = K (x) K

    const MatrixC H = tensor_action(c3, mods, Gen::H);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(cdist(H(i * 3 + j, i * 3 + j), mods[0].weight(i) + mods[1].weight(j)) < 1e-13);
    CHECK(max_abs(H - MatrixC(H.diagonal().asDiagonal())) == 0.0);  // exactly diagonal
}

TEST_CASE("E acts on a 2x2 tensor product as 1 (x) E + E (x) K") {
    const RootContext c2 = RootContext::make(2);
    const Cplx la(0.3), lb(0.7);
    const std::vector<WeightModule> mods{typical_module(c2, la), typical_module(c2, lb)};
    const MatrixC lifted = tensor_action(c2, mods, Gen::E);
    const MatrixC byhand = kron(MatrixC::Identity(2, 2), mods[1].E) + kron(mods[0].E, mods[1].K);
    CHECK(max_abs(lifted - byhand) < 1e-14);
}

TEST_CASE("word action multiplies generator actions in order") {
    const RootContext c2 = RootContext::make(2);
    const std::vector<WeightModule> mods{typical_module(c2, Cplx(0.3)),
                                         typical_module(c2, Cplx(0.7))};
    const std::array<Gen, 2> ef{Gen::E, Gen::F};
    const MatrixC word = tensor_action(c2, mods, std::span<const Gen>(ef));
    const MatrixC manual = tensor_action(c2, mods, Gen::E) * tensor_action(c2, mods, Gen::F);
    CHECK(max_abs(word - manual) < 1e-14);
    CHECK_THROWS_AS(tensor_action(c2, std::span<const WeightModule>(), Gen::E), SignatureMismatch);

    // modules of a different root order are rejected
    const RootContext c3 = RootContext::make(3);
    const std::vector<WeightModule> mixed{typical_module(c2, Cplx(0.3)),
                                          typical_module(c3, Cplx(0.3))};
    CHECK_THROWS_AS(tensor_action(c2, mixed, Gen::E), SignatureMismatch);
}

TEST_CASE("coassociativity on a triple product") {
    // acting on V1 (x) (V2 (x) V3) and (V1 (x) V2) (x) V3 must agree, i.e.
    // lifting a generator to three factors directly equals lifting it to two
    // factors and then expanding the inner factor.
    const RootContext c2 = RootContext::make(2);
    auto gen = ado::test::rng(3);
    for (int t = 0; t < 5; ++t) {
        std::vector<WeightModule> mods;
        for (int i = 0; i < 3; ++i) mods.push_back(typical_module(c2, verify::random_typical(gen)));
        for (Gen g : {Gen::E, Gen::F, Gen::K}) {
            const MatrixC three = tensor_action(c2, mods, g);
            const std::vector<WeightModule> left{mods[0], mods[1]};
            const std::vector<WeightModule> right{mods[1], mods[2]};
            MatrixC a, b;
            switch (g) {
                case Gen::E:
                    // (Delta (x) id)Delta(E) = Delta(E) (x) K + 1 (x) 1 (x) E
                    a = kron(tensor_action(c2, left, Gen::E), mods[2].K) +
                        kron(MatrixC::Identity(4, 4), mods[2].E);
                    // (id (x) Delta)Delta(E) = 1 (x) Delta(E) + E (x) K (x) K
                    b = kron(MatrixC::Identity(2, 2), tensor_action(c2, right, Gen::E)) +
                        kron(mods[0].E, kron(mods[1].K, mods[2].K));
                    break;
                case Gen::F:
                    a = kron(tensor_action(c2, left, Gen::F), MatrixC::Identity(2, 2)) +
                        kron(kron(mods[0].Kinv, mods[1].Kinv), mods[2].F);
                    b = kron(mods[0].Kinv, tensor_action(c2, right, Gen::F)) +
                        kron(mods[0].F, MatrixC::Identity(4, 4));
                    break;
                default:
                    a = kron(tensor_action(c2, left, Gen::K), mods[2].K);
                    b = kron(mods[0].K, tensor_action(c2, right, Gen::K));
            }
            CHECK(max_abs(three - a) <= 1e-9);
            CHECK(max_abs(three - b) <= 1e-9);
        }
    }
}

TEST_CASE("coproduct respects the defining relations (algebra map)") {
    const RootContext c3 = RootContext::make(3);
    auto gen = ado::test::rng(5);
    const std::vector<WeightModule> mods{typical_module(c3, verify::random_typical(gen)),
                                         typical_module(c3, verify::random_typical(gen))};
    const MatrixC E = tensor_action(c3, mods, Gen::E);
    const MatrixC F = tensor_action(c3, mods, Gen::F);
    const MatrixC K = tensor_action(c3, mods, Gen::K);
    const MatrixC Ki = tensor_action(c3, mods, Gen::Kinv);
    const MatrixC H = tensor_action(c3, mods, Gen::H);
    const MatrixC id = MatrixC::Identity(9, 9);
    const Cplx q2 = q_pow(c3, 2.0);
    CHECK(max_abs(H * E - E * H - 2.0 * E) <= 1e-9);
    CHECK(max_abs(H * F - F * H + 2.0 * F) <= 1e-9);
    CHECK(max_abs(K * Ki - id) <= 1e-9);
    CHECK(max_abs(K * E * Ki - q2 * E) <= 1e-9);
    CHECK(max_abs(K * F * Ki - F / q2) <= 1e-9);
    CHECK(max_abs(E * F - F * E - (K - Ki) / (q_pow(c3, 1.0) - q_pow(c3, -1.0))) <= 1e-9);
    MatrixC En = id, Fn = id;
    for (int n = 0; n < 3; ++n) { En = En * E; Fn = Fn * F; }
    CHECK(max_abs(En) <= 1e-9);  // E^N = 0 survives the coproduct
    CHECK(max_abs(Fn) <= 1e-9);
}

TEST_CASE("antipode and counit tables") {
    const RootContext c3 = RootContext::make(3);
    const WeightModule m = typical_module(c3, Cplx(0.4, 0.1));
    CHECK(max_abs(antipode_action(m, Gen::E) + m.E * m.Kinv) == 0.0);
    CHECK(max_abs(antipode_action(m, Gen::F) + m.K * m.F) == 0.0);
    CHECK(max_abs(antipode_action(m, Gen::K) - m.Kinv) == 0.0);
    CHECK(max_abs(antipode_action(m, Gen::H) + m.H) == 0.0);
    CHECK(counit(Gen::E) == Cplx(0.0));
    CHECK(counit(Gen::K) == Cplx(1.0));
    // antipode property on the module: m(S (x) id)Delta(x) = counit(x) for K
    const MatrixC conv = antipode_action(m, Gen::K) * m.K;
    CHECK(max_abs(conv - MatrixC::Identity(3, 3)) < 1e-14);
}
