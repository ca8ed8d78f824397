#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ramseyforge {

// Clause database in canonical form: within each clause literals are sorted
// by variable (positive before negative), duplicates removed and tautologies
// dropped; the clause list itself is deduplicated and sorted. Canonical form
// is what makes DIMACS output byte-stable.
struct Cnf {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;
};

// Canonicalizes a raw clause list. Throws std::invalid_argument on zero
// literals or variables outside [1, variable_count].
Cnf make_cnf(int variable_count, std::vector<std::vector<int>> raw_clauses);

bool clause_satisfied(const std::vector<int>& clause, const std::vector<bool>& assignment);
bool cnf_satisfied(const Cnf& cnf, const std::vector<bool>& assignment);

// Property-B / not-all-equal encoding of a hypergraph 2-coloring: per edge
// one all-positive and one all-negative clause. Variable v true <=> vertex v
// has color 1. Each edge needs at least 2 vertices.
Cnf encode_nae2(const std::vector<std::vector<int>>& edges, int variable_count);

// Proper c-coloring of a graph. Vertex v in [1..vertex_count] with color
// j in [0..c-1] is variable 1 + (v-1)*c + j. At-least-one and pairwise
// at-most-one clauses per vertex, one conflict clause per edge and color.
Cnf encode_graph_kcolor(const std::vector<std::pair<int, int>>& edges, int vertex_count, int c);

// Reads a color-per-vertex map out of a satisfying assignment of
// encode_graph_kcolor. Throws std::logic_error unless exactly one color
// variable is set per vertex.
std::vector<int> decode_kcolor(const std::vector<bool>& assignment, int vertex_count, int c);

}  // namespace ramseyforge
