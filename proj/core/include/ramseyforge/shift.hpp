#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramseyforge/kset.hpp"

namespace ramseyforge {

// A proper coloring of the shift graph Sh(N,k): no two k-sets in shift
// position share a color. Colors are 0-based residues; where the alphabet
// {1..c} of the source material is meant, residue 0 stands for label c.
struct ProperColoring {
    int n = 0;  // ground set [1..n]
    int k = 0;  // subset arity
    int c = 0;  // number of colors
    std::vector<int> colors;  // indexed by lexicographic rank of each k-subset

    int color_of(const KSet& x) const { return colors[rank(x, n)]; }
};

// Exhaustive properness scan over every shift edge.
bool is_proper_shift_coloring(const ProperColoring& phi);

// Classical coloring of Sh(N,2): the pair {i < j} gets the index of the
// most significant bit in which i-1 and j-1 differ. Uses ceil(log2 N)
// colors; at most 3 for N <= 8.
ProperColoring bit_color_pairs(int N);

// Sh(N,1) is complete, so three colors only reach N = 3.
ProperColoring complete_color_singletons(int N);

// SAT search for a proper c-coloring of Sh(N,k); nullopt iff none exists.
// Decoded colorings are re-verified by a properness scan. Refuses
// instances beyond C(N,k)*c = 20000 variables.
std::optional<ProperColoring> find_coloring_sat(int N, int k, int c);

// Least c <= c_max admitting a proper coloring; nullopt means "> c_max".
std::optional<int> chromatic_shift(int N, int k, int c_max);

struct SExactResult {
    int value = 0;        // largest N found with chi(Sh(N,k)) <= 3
    bool exact = false;   // true when N+1 was certified to need a 4th color
    int probed_to = 0;    // last N actually decided
};

// Walks N upward (Sh(N,k) embeds in Sh(N+1,k)) until three colors stop
// sufficing or N_max / the size cap is hit.
SExactResult s_exact_upto(int k, int N_max);

// Coloring file: "shiftcoloring N k c", then one line per k-set in
// lexicographic order, "x1 x2 ... xk color" (1-based elements, 0-based
// color), LF endings.
std::string write_shift_coloring(const ProperColoring& phi);
ProperColoring read_shift_coloring(std::string_view text);

}  // namespace ramseyforge
