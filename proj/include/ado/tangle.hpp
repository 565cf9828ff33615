#pragma once

#include <string_view>
#include <vector>

#include "ado/ribbon.hpp"

namespace ado {

// A braid on `strands` strands as a list of signed generators: entry +i means
// sigma_i (strand at position i crosses over position i+1), -i its inverse.
// Positions are 1-based in the word, 0-based everywhere else in the API.
struct BraidWord {
    int strands = 1;
    std::vector<int> word;
};

// Grammar (exact): ["<k>:"] (<nonzero signed int> whitespace)*.
// Without the "k:" prefix the strand count is 1 + max |index|.
BraidWord parse_braid(std::string_view text);

// perm[p] = top position reached by the strand entering at bottom position p.
std::vector<int> closure_permutation(const BraidWord& braid);

// Cycles of the closure permutation (0-based strand positions), each sorted,
// ordered by smallest member. One cycle per link component.
std::vector<std::vector<int>> closure_components(const BraidWord& braid);

// A braid closure with one color per component and blackboard framing.
struct ColoredLink {
    BraidWord braid;
    std::vector<std::vector<int>> components;
    std::vector<Cplx> colors;   // one per component, in component order
    std::vector<int> framing;   // per-component writhe (signed self-crossings)

    int component_of(int strand) const;
    Cplx color_of_strand(int strand) const { return colors[size_t(component_of(strand))]; }
};

// Checks the color count against the component count (ParseError otherwise).
// Typicality is enforced later, at compile time.
ColoredLink colored_link(const BraidWord& braid, std::vector<Cplx> colors);

// Signed count of crossings whose two strands belong to the same component,
// per component.
std::vector<int> writhe_per_component(const ColoredLink& link);

// Compiles the colored braid to a morphism on V_{c(1)} (x) ... (x) V_{c(k)}.
// Crossings are applied slice by slice to the columns of the accumulating
// matrix; the lifted crossing (id (x) c (x) id) is never materialized, so
// scratch memory stays within 2 N^k entries per column. The evolving strand
// color sequence is tracked so each crossing uses the correct module pair.
// Throws TypicalityError on atypical colors and ResourceError if N^k > 10^6.
Morphism compile(const RootContext& ctx, const ColoredLink& link);

}  // namespace ado
