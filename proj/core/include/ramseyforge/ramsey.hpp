#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramseyforge/bridges.hpp"
#include "ramseyforge/kset.hpp"
#include "ramseyforge/shift.hpp"

namespace ramseyforge {

// Composite 2-coloring of k-subsets: split X into `parts` equal segments,
// read off the phi colors of the segments as a vector of Z_c^parts, then
// apply a 2-coloring psi of that cube. Built so that no (k+1)-set is
// monochromatic whenever psi kills every bridge.
struct RamseyColoring {
    int n = 0;      // ground set [1..n]
    int k = 0;      // arity of the colored sets
    int parts = 0;  // number of segments (the bridge dimension)
    int c = 0;      // colors of phi / alphabet of the cube
    ProperColoring phi;       // proper coloring of Sh(n, k/parts)
    std::vector<int> psi;     // 2-coloring of Z_c^parts, indexed by color_vector_index
    std::vector<int> colors;  // derived colors of all k-subsets, values {1,2}, by rank

    int color_of(const KSet& x) const { return colors[rank(x, n)]; }
};

// The segment-color vector (phi(X^1), ..., phi(X^parts)).
ColorVector lambda_map(const KSet& x, const ProperColoring& phi, int parts);

// For |Y| = 4l+1, the five k-subsets Z_j = Y minus its (jl+1)-th element.
std::array<KSet, 5> special_subsets(const KSet& y, int l);

// The block decomposition behind the bridge structure of the five special
// subsets: A_j = {y_{jl+2}..y_{(j+1)l+1}}, B_j = {y_{jl+1}..y_{(j+1)l}};
// B_j sits one shift before A_j, and Z_i = B_0..B_{i-1} A_i..A_3.
struct BlockDecomposition {
    std::array<KSet, 4> a;
    std::array<KSet, 4> b;
};
BlockDecomposition blocks(const KSet& y, int l);

// Materializes psi composed with lambda on every k-subset of [N].
// The degenerate segment size 1 is allowed only for N <= 3, where
// Sh(N,1) = K_N still admits a proper 3-coloring.
RamseyColoring build_coloring(int N, int k, const ProperColoring& phi,
                              const std::vector<int>& psi, int parts);

struct CliqueScanOutcome {
    std::optional<KSet> witness;  // a q-set whose k-subsets all share a color
    bool vacuous = false;         // q > N: nothing to scan
    std::uint64_t scanned = 0;
};

// Scans every q-subset of [N] for a monochromatic clique; the witness is
// the lexicographically first regardless of worker count.
CliqueScanOutcome verify_no_mono_clique(const RamseyColoring& rc, int q, int workers = 1);
// Same scan for a bare color table (values {1,2} by rank of k-subsets).
CliqueScanOutcome mono_clique_witness(int N, int k, const std::vector<int>& colors, int q,
                                      int workers = 1);

struct SpecialFiveOutcome {
    struct Witness {
        KSet superset;
        std::array<int, 5> colors;
    };
    std::optional<Witness> witness;  // a (k+1)-set whose five special subsets are monochromatic
    std::uint64_t scanned = 0;
};

// The stronger form of the clique scan: every (k+1)-set Y must already be
// non-monochromatic on its five special subsets. Requires parts = 4.
SpecialFiveOutcome verify_special_five(const RamseyColoring& rc, int workers = 1);

// Coloring file: "ramseycoloring N k", then one line per k-set in
// lexicographic order, "x1 ... xk color" with color in {1,2}.
std::string write_ramsey_coloring(int N, int k, const std::vector<int>& colors);
std::vector<int> read_ramsey_coloring(std::string_view text, int& n_out, int& k_out);

}  // namespace ramseyforge
