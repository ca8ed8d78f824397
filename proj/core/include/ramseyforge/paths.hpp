#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramseyforge/kset.hpp"
#include "ramseyforge/shift.hpp"

namespace ramseyforge {

enum class PathColor { red, blue };

// Color comparisons in these constructions use the labels 1 < 2 < 3, with
// residue 0 standing for label 3.
int color_label(int residue);

// The ordered-path construction on k-sets from a 3-coloring phi of the
// (k-4)-windows: a set is red when its five window colors c1..c5 satisfy
// c2<c3>c4 (type I) or c1>c2>c3<c4<c5 (type II).
struct P23Result {
    PathColor color;
    int type;  // 1 or 2 for red, 0 for blue
};
P23Result p23_color(const KSet& x, const ProperColoring& phi);

// Red when phi on the first (k-1)-window is below phi on the second; the
// windows are in shift position, so a proper phi never ties. Throws on a
// tie (the supplied phi was not proper).
PathColor p33_color(const KSet& x, const ProperColoring& phi);

// Red exactly when phi(X) carries label 1.
PathColor k1_2k1_color(const KSet& x, const ProperColoring& phi);

struct PathWitness {
    std::string phase;  // "red" or "blue"
    KSet superset;
};

struct PathVerifyReport {
    std::optional<PathWitness> witness;
    bool red_vacuous = false;
    bool blue_vacuous = false;
    std::uint64_t red_scanned = 0;
    std::uint64_t blue_scanned = 0;

    bool clean() const { return !witness.has_value(); }
};

// No red path of 2 (scans (k+1)-sets) and no blue path of 3 (scans
// (k+2)-sets). Validates properness of phi first.
PathVerifyReport verify_p23(int N, int k, const ProperColoring& phi, int workers = 1);

// No monochromatic path of 3 in either color (scans (k+2)-sets).
PathVerifyReport verify_p33(int N, int k, const ProperColoring& phi, int workers = 1);

// No red pair in shift position, no all-red (k+1)-set, and no (2k+1)-set
// with every k-subset blue.
PathVerifyReport verify_k1_2k1(int N, int k, const ProperColoring& phi, int workers = 1);

// An explicit odd closed walk in the undirected shift graph induced by the
// k-subsets of a (2k+1)-set. One always exists; failing to find one is an
// internal error.
std::vector<KSet> odd_cycle_in_shift(const KSet& y, int k);

enum class PathVariant { p23, p33, k1_2k1 };

// Materialized red/blue coloring of all k-subsets (1 = red, 2 = blue).
struct PathColoring {
    int n = 0;
    int k = 0;
    PathVariant variant = PathVariant::p23;
    std::vector<int> colors;
};

PathColoring build_path_coloring(int N, int k, PathVariant variant, const ProperColoring& phi);

// File format: header token "pathcoloring", otherwise as ramseycoloring.
std::string write_path_coloring(const PathColoring& pc);
std::vector<int> read_path_coloring(std::string_view text, int& n_out, int& k_out);

}  // namespace ramseyforge
