#include "ramseyforge/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ramseyforge {

namespace {

// Literal order within a clause: by variable, positive polarity first.
std::uint64_t literal_key(int lit) {
    return (static_cast<std::uint64_t>(std::abs(lit)) << 1) | (lit < 0 ? 1u : 0u);
}

bool clause_less(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto ka = literal_key(a[i]);
        const auto kb = literal_key(b[i]);
        if (ka != kb) return ka < kb;
    }
    return a.size() < b.size();
}

}  // namespace

Cnf make_cnf(int variable_count, std::vector<std::vector<int>> raw_clauses) {
    if (variable_count < 0) throw std::invalid_argument("make_cnf: negative variable count");
    std::vector<std::vector<int>> kept;
    kept.reserve(raw_clauses.size());
    for (auto& clause : raw_clauses) {
        for (int lit : clause) {
            if (lit == 0 || std::abs(lit) > variable_count) {
                throw std::invalid_argument("make_cnf: literal out of range");
            }
        }
        std::sort(clause.begin(), clause.end(),
                  [](int a, int b) { return literal_key(a) < literal_key(b); });
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        bool tautology = false;
        for (std::size_t i = 0; i + 1 < clause.size(); ++i) {
            if (clause[i] == -clause[i + 1]) {
                tautology = true;
                break;
            }
        }
        if (!tautology) kept.push_back(std::move(clause));
    }
    std::sort(kept.begin(), kept.end(), clause_less);
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return Cnf{variable_count, std::move(kept)};
}

bool clause_satisfied(const std::vector<int>& clause, const std::vector<bool>& assignment) {
    for (int lit : clause) {
        const bool value = assignment[static_cast<std::size_t>(std::abs(lit))];
        if (lit > 0 ? value : !value) return true;
    }
    return false;
}

bool cnf_satisfied(const Cnf& cnf, const std::vector<bool>& assignment) {
    for (const auto& clause : cnf.clauses) {
        if (!clause_satisfied(clause, assignment)) return false;
    }
    return true;
}

Cnf encode_nae2(const std::vector<std::vector<int>>& edges, int variable_count) {
    std::vector<std::vector<int>> clauses;
    clauses.reserve(edges.size() * 2);
    for (const auto& edge : edges) {
        if (edge.size() < 2) {
            throw std::invalid_argument("encode_nae2: edges need at least 2 vertices");
        }
        std::vector<int> pos, neg;
        pos.reserve(edge.size());
        neg.reserve(edge.size());
        for (int v : edge) {
            if (v < 1 || v > variable_count) {
                throw std::invalid_argument("encode_nae2: vertex index out of range");
            }
            pos.push_back(v);
            neg.push_back(-v);
        }
        clauses.push_back(std::move(pos));
        clauses.push_back(std::move(neg));
    }
    return make_cnf(variable_count, std::move(clauses));
}

Cnf encode_graph_kcolor(const std::vector<std::pair<int, int>>& edges, int vertex_count, int c) {
    if (c < 1) throw std::invalid_argument("encode_graph_kcolor: need c >= 1");
    if (vertex_count < 0) throw std::invalid_argument("encode_graph_kcolor: negative vertex count");
    const auto var = [c](int v, int j) { return 1 + (v - 1) * c + j; };
    std::vector<std::vector<int>> clauses;
    for (int v = 1; v <= vertex_count; ++v) {
        std::vector<int> at_least_one;
        at_least_one.reserve(static_cast<std::size_t>(c));
        for (int j = 0; j < c; ++j) at_least_one.push_back(var(v, j));
        clauses.push_back(std::move(at_least_one));
        for (int j = 0; j < c; ++j) {
            for (int j2 = j + 1; j2 < c; ++j2) {
                clauses.push_back({-var(v, j), -var(v, j2)});
            }
        }
    }
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > vertex_count || v < 1 || v > vertex_count) {
            throw std::invalid_argument("encode_graph_kcolor: edge endpoint out of range");
        }
        for (int j = 0; j < c; ++j) {
            clauses.push_back({-var(u, j), -var(v, j)});
        }
    }
    return make_cnf(vertex_count * c, std::move(clauses));
}

std::vector<int> decode_kcolor(const std::vector<bool>& assignment, int vertex_count, int c) {
    std::vector<int> colors(static_cast<std::size_t>(vertex_count), -1);
    for (int v = 1; v <= vertex_count; ++v) {
        for (int j = 0; j < c; ++j) {
            if (assignment[static_cast<std::size_t>(1 + (v - 1) * c + j)]) {
                if (colors[static_cast<std::size_t>(v - 1)] != -1) {
                    throw std::logic_error("decode_kcolor: vertex has two colors");
                }
                colors[static_cast<std::size_t>(v - 1)] = j;
            }
        }
        if (colors[static_cast<std::size_t>(v - 1)] == -1) {
            throw std::logic_error("decode_kcolor: vertex has no color");
        }
    }
    return colors;
}

}  // namespace ramseyforge
