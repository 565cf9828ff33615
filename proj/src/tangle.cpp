#include "ado/tangle.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace ado {

BraidWord parse_braid(std::string_view text) {
    BraidWord braid;
    int declared = 0;
    size_t pos = 0;
    // optional "k:" prefix fixing the strand count
    if (const size_t colon = text.find(':'); colon != std::string_view::npos) {
        const std::string_view head = text.substr(0, colon);
        const char* b = head.data();
        const char* e = head.data() + head.size();
        while (b < e && std::isspace((unsigned char)*b)) ++b;
        while (e > b && std::isspace((unsigned char)e[-1])) --e;
        int k = 0;
        const auto [p, ec] = std::from_chars(b, e, k);
        if (ec != std::errc{} || p != e || k < 1)
            throw ParseError("invalid strand count before ':'");
        declared = k;
        pos = colon + 1;
    }
    int max_index = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
        if (pos >= text.size()) break;
        size_t end = pos;
        while (end < text.size() && !std::isspace((unsigned char)text[end])) ++end;
        const std::string_view tok = text.substr(pos, end - pos);
        int v = 0;
        const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw ParseError("invalid braid token '" + std::string(tok) + "'");
        if (v == 0) throw ParseError("generator index 0 is not allowed");
        max_index = std::max(max_index, std::abs(v));
        braid.word.push_back(v);
        pos = end;
    }
    braid.strands = declared > 0 ? declared : max_index + 1;
    if (declared > 0 && max_index >= declared)
        throw ParseError("generator index " + std::to_string(max_index) +
                         " out of range for " + std::to_string(declared) + " strands");
    return braid;
}

namespace {

// Guards words assembled outside parse_braid (e.g. through the bindings).
void validate(const BraidWord& braid) {
    if (braid.strands < 1) throw ParseError("braid needs at least one strand");
    for (const int g : braid.word)
        if (g == 0 || std::abs(g) >= braid.strands)
            throw ParseError("generator index " + std::to_string(g) + " out of range for " +
                             std::to_string(braid.strands) + " strands");
}

}  // namespace

std::vector<int> closure_permutation(const BraidWord& braid) {
    validate(braid);
    // occupant[p] = bottom strand currently at position p
    std::vector<int> occupant(size_t(braid.strands));
    std::iota(occupant.begin(), occupant.end(), 0);
    for (const int g : braid.word) {
        const int i = std::abs(g) - 1;
        std::swap(occupant[size_t(i)], occupant[size_t(i) + 1]);
    }
    std::vector<int> perm(size_t(braid.strands));
    for (int p = 0; p < braid.strands; ++p) perm[size_t(occupant[size_t(p)])] = p;
    return perm;
}

std::vector<std::vector<int>> closure_components(const BraidWord& braid) {
    const std::vector<int> perm = closure_permutation(braid);
    std::vector<bool> seen(size_t(braid.strands), false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < braid.strands; ++s) {
        if (seen[size_t(s)]) continue;
        std::vector<int> cycle;
        for (int t = s; !seen[size_t(t)]; t = perm[size_t(t)]) {
            seen[size_t(t)] = true;
            cycle.push_back(t);
        }
        std::sort(cycle.begin(), cycle.end());
        comps.push_back(std::move(cycle));
    }
    return comps;  // cycles are discovered in order of their smallest strand
}

int ColoredLink::component_of(int strand) const {
    for (size_t c = 0; c < components.size(); ++c)
        for (const int s : components[c])
            if (s == strand) return int(c);
    throw SignatureMismatch("strand index out of range");
}

ColoredLink colored_link(const BraidWord& braid, std::vector<Cplx> colors) {
    ColoredLink link;
    link.braid = braid;
    link.components = closure_components(braid);
    if (colors.size() != link.components.size())
        throw ParseError("expected " + std::to_string(link.components.size()) +
                         " colors (one per component), got " + std::to_string(colors.size()));
    link.colors = std::move(colors);
    link.framing = writhe_per_component(link);
    return link;
}

std::vector<int> writhe_per_component(const ColoredLink& link) {
    validate(link.braid);
    std::vector<int> comp_of(size_t(link.braid.strands));
    for (size_t c = 0; c < link.components.size(); ++c)
        for (const int s : link.components[c]) comp_of[size_t(s)] = int(c);
    std::vector<int> writhe(link.components.size(), 0);
    std::vector<int> occupant(size_t(link.braid.strands));
    std::iota(occupant.begin(), occupant.end(), 0);
    for (const int g : link.braid.word) {
        const int i = std::abs(g) - 1;
        const int a = comp_of[size_t(occupant[size_t(i)])];
        const int b = comp_of[size_t(occupant[size_t(i) + 1])];
        if (a == b) writhe[size_t(a)] += (g > 0 ? 1 : -1);
        std::swap(occupant[size_t(i)], occupant[size_t(i) + 1]);
    }
    return writhe;
}

namespace {

// Applies the N^2 x N^2 crossing B to tensor positions (pos, pos+1) of every
// column of M in place. Column layout (first factor most significant) makes
// the block at fixed left-index a contiguous (R x N^2) panel, so each update
// is a small GEMM; nothing of size N^k x N^k beyond M itself is formed.
void apply_slice(MatrixC& M, const MatrixC& B, int N, int k, int pos) {
    long L = 1, R = 1;
    for (int s = 0; s < pos; ++s) L *= N;
    for (int s = pos + 2; s < k; ++s) R *= N;
    const long D = M.rows();
    const MatrixC Bt = B.transpose();
    MatrixC panel(R, long(N) * N);
    for (long c = 0; c < M.cols(); ++c) {
        for (long a = 0; a < L; ++a) {
            Eigen::Map<MatrixC> block(M.data() + c * D + a * long(N) * N * R, R, long(N) * N);
            panel.noalias() = block * Bt;
            block = panel;
        }
    }
}

}  // namespace

Morphism compile(const RootContext& ctx, const ColoredLink& link) {
    validate(link.braid);
    const int N = ctx.N;
    const int k = link.braid.strands;
    long D = 1;
    for (int s = 0; s < k; ++s) {
        if (D > 1'000'000L / N) throw ResourceError("state space N^k exceeds 10^6");
        D *= N;
    }
    if (D > (1L << 13))  // the morphism itself is D^2 entries; cap it at ~1 GiB
        throw ResourceError("dense morphism of " + std::to_string(D) + "^2 entries is too large;"
                            " reduce the strand count or N");

    std::vector<Cplx> cols(static_cast<size_t>(k));
    for (int p = 0; p < k; ++p) cols[size_t(p)] = link.color_of_strand(p);
    std::map<std::pair<double, double>, WeightModule> cache;
    auto module_of = [&](Cplx lam) -> const WeightModule& {
        const auto key = std::make_pair(lam.real(), lam.imag());
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, typical_module(ctx, lam)).first;
        return it->second;
    };
    for (const Cplx c : cols) module_of(c);  // typicality check up front

    const ObjectSignature dom{cols};
    MatrixC M = MatrixC::Identity(D, D);
    for (const int g : link.braid.word) {
        const int i = std::abs(g) - 1;
        const WeightModule& A = module_of(cols[size_t(i)]);
        const WeightModule& B = module_of(cols[size_t(i) + 1]);
        const Morphism cr = g > 0 ? braiding(ctx, A, B) : braiding_inv(ctx, B, A);
        apply_slice(M, cr.matrix, N, k, i);
        std::swap(cols[size_t(i)], cols[size_t(i) + 1]);
    }
    return Morphism{dom, ObjectSignature{cols}, std::move(M)};
}

}  // namespace ado
