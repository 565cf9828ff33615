#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "ado/tangle.hpp"
#include "ado/verify.hpp"
#include "test_support.hpp"

using namespace ado;

TEST_CASE("parse_braid grammar") {
    const BraidWord tref = parse_braid("1 1 1");
    CHECK(tref.strands == 2);
    CHECK(tref.word == std::vector<int>{1, 1, 1});

    const BraidWord b = parse_braid("3: 1 -2");
    CHECK(b.strands == 3);
    CHECK(b.word == std::vector<int>{1, -2});

    const BraidWord empty = parse_braid("");
    CHECK(empty.strands == 1);
    CHECK(empty.word.empty());

    CHECK(parse_braid("  -3   2 ").strands == 4);

    CHECK_THROWS_AS(parse_braid("0 1"), ParseError);
    CHECK_THROWS_AS(parse_braid("1 x"), ParseError);
    CHECK_THROWS_AS(parse_braid("2: 1 2"), ParseError);  // index 2 needs 3 strands
    CHECK_THROWS_AS(parse_braid("0: 1"), ParseError);
    CHECK_THROWS_AS(parse_braid("a: 1"), ParseError);
    CHECK_THROWS_AS(parse_braid("1.5"), ParseError);
}

TEST_CASE("parse_braid never crashes on arbitrary token soup") {
    std::mt19937_64 gen(20250811);
    std::uniform_int_distribution<int> len(0, 30);
    std::uniform_int_distribution<int> chr(0, 15);
    const char alphabet[] = "0123456789-+: .xe";
    for (int t = 0; t < 1000; ++t) {
        std::string s;
        const int L = len(gen);
        for (int i = 0; i < L; ++i) s.push_back(alphabet[size_t(chr(gen))]);
        try {
            (void)parse_braid(s);
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("closure components") {
    CHECK(closure_components(parse_braid("1 1")) ==
          std::vector<std::vector<int>>{{0}, {1}});  // Hopf link
    CHECK(closure_components(parse_braid("1 1 1")) ==
          std::vector<std::vector<int>>{{0, 1}});  // trefoil
    // sigma_1 sigma_2^-1 sigma_1 sigma_2^-1 on 3 strands: one component
    CHECK(closure_components(parse_braid("1 -2 1 -2")) ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(closure_components(parse_braid("3:")).size() == 3);
}

TEST_CASE("writhe per component") {
    auto link1 = colored_link(parse_braid("1 1 1"), {Cplx(0.5)});
    CHECK(writhe_per_component(link1) == std::vector<int>{3});
    CHECK(link1.framing == std::vector<int>{3});

    auto link2 = colored_link(parse_braid("1 1"), {Cplx(0.5), Cplx(0.3)});
    CHECK(writhe_per_component(link2) == std::vector<int>{0, 0});

    auto link3 = colored_link(parse_braid("1 -1"), {Cplx(0.5), Cplx(0.3)});
    CHECK(writhe_per_component(link3) == std::vector<int>{0, 0});
}

TEST_CASE("colored_link checks the color count") {
    CHECK_THROWS_AS(colored_link(parse_braid("1 1"), {Cplx(0.5)}), ParseError);
    CHECK_THROWS_AS(colored_link(parse_braid("1 1 1"), {Cplx(0.5), Cplx(0.3)}), ParseError);
}

TEST_CASE("compile: identity, single crossing, cancelling pair") {
    const RootContext c3 = RootContext::make(3);
    const Cplx la(0.4, 0.1), lb(0.8, -0.1);

    const Morphism empty = compile(c3, colored_link(parse_braid("2:"), {la, lb}));
    CHECK(max_abs(empty.matrix - MatrixC::Identity(9, 9)) == 0.0);

    const Morphism single = compile(c3, colored_link(parse_braid("1"), {la}));
    const WeightModule V = typical_module(c3, la);
    CHECK(max_abs(single.matrix - braiding(c3, V, V).matrix) < 1e-13);

    const Morphism cancel = compile(c3, colored_link(parse_braid("1 -1"), {la, lb}));
    CHECK(max_abs(cancel.matrix - MatrixC::Identity(9, 9)) <= 1e-9);
}

TEST_CASE("compile satisfies the braid relations") {
    auto gen = ado::test::rng(17);
    for (int N : {2, 3}) {
        const RootContext ctx = RootContext::make(N);
        // sigma1 sigma2 sigma1 closes to two components, so two distinct
        // colors exercise the color tracking through both orderings
        const std::vector<Cplx> two{verify::random_typical(gen), verify::random_typical(gen)};
        auto value = [&](const char* word, const std::vector<Cplx>& colors) {
            const BraidWord b = parse_braid(word);
            return compile(ctx, colored_link(b, colors)).matrix;
        };
        CHECK(max_abs(value("3: 1 2 1", two) - value("3: 2 1 2", two)) <= 1e-8);
        // distant generators commute; the closure has two components as well
        CHECK(max_abs(value("4: 1 3", two) - value("4: 3 1", two)) <= 1e-8);
    }
}

TEST_CASE("compile tracks the strand colors through the permutation") {
    const RootContext c2 = RootContext::make(2);
    const BraidWord b = parse_braid("3: 1 2");
    const auto comps = closure_components(b);  // single 3-cycle
    CHECK(comps.size() == 1);
    // distinct per-position colors are impossible on one component, so check
    // with per-component coloring that domain and codomain signatures agree
    const Morphism m = compile(c2, colored_link(b, {Cplx(0.6)}));
    CHECK(signatures_match(m.domain, m.codomain));

    // two components, distinct colors: codomain is the domain permuted
    const BraidWord h = parse_braid("1 1");
    const Morphism hm = compile(c2, colored_link(h, {Cplx(0.6), Cplx(0.25)}));
    CHECK(signatures_match(hm.domain, hm.codomain));  // sigma_1^2 restores positions
}

TEST_CASE("state-space guard rejects oversized braids") {
    const RootContext c9 = RootContext::make(9);
    const BraidWord b = parse_braid("7: 1");
    const auto comps = closure_components(b);
    CHECK_THROWS_AS(compile(c9, colored_link(b, std::vector<Cplx>(comps.size(), Cplx(0.5)))),
                    ResourceError);  // 9^7 > 10^6
}

TEST_CASE("codomain signature is the domain permuted by the closure permutation") {
    auto gen = ado::test::rng(41);
    const RootContext c2 = RootContext::make(2);
    for (int t = 0; t < 10; ++t) {
        const BraidWord b = verify::random_braid(gen, 4, 8);
        const auto comps = closure_components(b);
        std::vector<Cplx> colors;
        for (size_t c = 0; c < comps.size(); ++c) colors.push_back(verify::random_typical(gen));
        const ColoredLink link = colored_link(b, colors);
        const Morphism m = compile(c2, link);
        const auto perm = closure_permutation(b);
        for (int s = 0; s < b.strands; ++s)
            CHECK(m.codomain.colors[size_t(perm[size_t(s)])] == m.domain.colors[size_t(s)]);
    }
}
