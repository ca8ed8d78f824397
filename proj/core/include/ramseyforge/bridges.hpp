#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramseyforge/cnf.hpp"

namespace ramseyforge {

// A point of Z_c^n: n residues in {0..c-1}. Residue 0 stands for the color
// label c wherever an alphabet {1..c} is meant (label i maps to i mod c).
struct ColorVector {
    std::vector<int> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    friend bool operator==(const ColorVector& a, const ColorVector& b) {
        return a.coords == b.coords;
    }
    friend bool operator<(const ColorVector& a, const ColorVector& b) {
        return a.coords < b.coords;
    }
    std::string str() const;
};

// 0-based position of v in the lexicographic order of Z_c^n (first
// coordinate most significant), and its inverse.
std::uint64_t color_vector_index(const ColorVector& v, int c);
ColorVector color_vector_at(std::uint64_t index, int n, int c);

// An n-bridge: the chain from a to b obtained by replacing suffixes of
// increasing length, for endpoints disagreeing in every coordinate.
struct Bridge {
    ColorVector a, b;
    std::vector<ColorVector> members;  // n+1 vectors, members[j] ends with j coords of b

    friend bool operator==(const Bridge& x, const Bridge& y) {
        return x.a == y.a && x.b == y.b && x.members == y.members;
    }
};

// Throws std::invalid_argument on shape mismatch or when a and b agree in
// some coordinate (a degenerate pair spans no bridge).
std::vector<ColorVector> bridge_members(const ColorVector& a, const ColorVector& b, int c);

// All ordered endpoint pairs with componentwise disagreement, lexicographic
// in (a, b); exactly c^n * (c-1)^n bridges.
std::uint64_t bridge_count(int n, int c);
Bridge bridge_at(std::uint64_t index, int n, int c);
std::vector<Bridge> enumerate_bridges(int n, int c);

// Decides whether the set of vectors is exactly the member set of some
// bridge; returns the endpoint witness (first in lexicographic (a,b) order).
std::optional<std::pair<ColorVector, ColorVector>> is_bridge_set(
    const std::vector<ColorVector>& s, int c);

// The explicit 2-coloring of Z_3^4 under which no bridge is monochromatic:
// color 1 iff v1+v2+v3+v4 = 0 or v1+v3 = 0 (mod 3), else color 2.
int chi_key(const ColorVector& v);
// chi_key tabulated over all 81 vectors, indexed by color_vector_index.
std::vector<int> chi_key_table();

// Scans every bridge of Z_c^n against a total coloring (indexed by
// color_vector_index, values in {1,2}); returns the first monochromatic
// bridge in enumeration order, independent of the worker count.
std::optional<Bridge> has_mono_bridge(const std::vector<int>& coloring, int n, int c,
                                      int workers = 1);

struct BridgeColorability {
    bool colorable = false;
    // Total coloring of Z_c^n with values in {1,2}; empty when not colorable.
    std::vector<int> coloring;
};

// CNF for "the n-bridge hypergraph over Z_c^n is 2-colorable": vertex v is
// variable 1 + color_vector_index(v, c); NAE clause pair per bridge.
Cnf encode_bridge_cnf(int n, int c);

// Solves the encoding; a sat certificate is decoded and re-verified with
// has_mono_bridge before being returned. Refuses c^n > 1024.
BridgeColorability bridge_2colorable(int n, int c);

struct MinimalBridgeableResult {
    std::optional<int> n;  // least n in [2, n_max] with a 2-colorable bridge hypergraph
    int scanned_to = 1;    // last n actually decided (caps can stop the scan early)
};

MinimalBridgeableResult minimal_bridgeable(int c, int n_max);

// Coloring file: header "bridgecoloring n c", then one line per vector in
// lexicographic order: "v1 v2 ... vn color" with color in {1,2}.
std::string write_bridge_coloring(const std::vector<int>& coloring, int n, int c);
std::vector<int> read_bridge_coloring(std::string_view text, int& n_out, int& c_out);

}  // namespace ramseyforge
