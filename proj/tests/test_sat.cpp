#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "ramseyforge/cnf.hpp"
#include "ramseyforge/dimacs.hpp"
#include "ramseyforge/solver.hpp"

using namespace ramseyforge;

TEST_CASE("make_cnf canonicalizes clauses") {
    const Cnf cnf = make_cnf(3, {{2, 1}, {1, 2}, {-2, -1}, {3, -3, 1}});
    CHECK(cnf.variable_count == 3);
    REQUIRE(cnf.clauses.size() == 2);  // duplicate merged, tautology dropped
    CHECK(cnf.clauses[0] == std::vector<int>{1, 2});
    CHECK(cnf.clauses[1] == std::vector<int>{-1, -2});
    CHECK_THROWS_AS(make_cnf(2, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_cnf(2, {{3}}), std::invalid_argument);
}

TEST_CASE("encode_nae2 produces the clause pair per edge") {
    const Cnf cnf = encode_nae2({{1, 2, 3}}, 3);
    REQUIRE(cnf.clauses.size() == 2);
    CHECK(cnf.clauses[0] == std::vector<int>{1, 2, 3});
    CHECK(cnf.clauses[1] == std::vector<int>{-1, -2, -3});

    const Cnf empty = encode_nae2({}, 5);
    CHECK(empty.clauses.empty());
    CHECK(solve(empty).is_sat());

    CHECK_THROWS_AS(encode_nae2({{1}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(encode_nae2({{1, 4}}, 3), std::invalid_argument);
}

TEST_CASE("encode_graph_kcolor separates colorable from uncolorable") {
    const std::vector<std::pair<int, int>> triangle{{1, 2}, {2, 3}, {1, 3}};
    CHECK_FALSE(solve(encode_graph_kcolor(triangle, 3, 2)).is_sat());

    const SolveResult three = solve(encode_graph_kcolor(triangle, 3, 3));
    REQUIRE(three.is_sat());
    const auto colors = decode_kcolor(three.assignment, 3, 3);
    CHECK(colors[0] != colors[1]);
    CHECK(colors[1] != colors[2]);
    CHECK(colors[0] != colors[2]);
}

TEST_CASE("solve handles forced and contradictory instances") {
    CHECK_FALSE(solve(make_cnf(1, {{1}, {-1}})).is_sat());

    const SolveResult forced = solve(make_cnf(2, {{1, 2}, {-1, 2}}));
    REQUIRE(forced.is_sat());
    CHECK(forced.assignment[2]);

    // empty clause: immediately unsat, not an error
    CHECK_FALSE(solve(make_cnf(2, {{}})).is_sat());

    const SolveResult trivial = solve(make_cnf(3, {}));
    REQUIRE(trivial.is_sat());
    CHECK(trivial.assignment.size() == 4);
    CHECK(testoracle::count_models(make_cnf(3, {})) == 8);
}

TEST_CASE("exhaustive_check agrees on the basics and refuses big instances") {
    CHECK(exhaustive_check(make_cnf(1, {{1}})).is_sat());
    CHECK(exhaustive_check(make_cnf(3, {})).is_sat());
    CHECK_FALSE(exhaustive_check(make_cnf(1, {{1}, {-1}})).is_sat());
    Cnf big;
    big.variable_count = 26;
    CHECK_THROWS_AS(exhaustive_check(big), std::invalid_argument);
}

TEST_CASE("solve matches the exhaustive oracle on random small formulas") {
    std::mt19937 rng(20240811u);
    for (int trial = 0; trial < 60; ++trial) {
        const int vars = 3 + static_cast<int>(rng() % 10);
        const int clause_count = 1 + static_cast<int>(rng() % (3 * vars));
        std::vector<std::vector<int>> raw;
        for (int i = 0; i < clause_count; ++i) {
            const int len = 1 + static_cast<int>(rng() % 4);
            std::vector<int> clause;
            for (int j = 0; j < len; ++j) {
                const int var = 1 + static_cast<int>(rng() % vars);
                clause.push_back(rng() % 2 ? var : -var);
            }
            raw.push_back(std::move(clause));
        }
        const Cnf cnf = make_cnf(vars, std::move(raw));
        const SolveResult fast = solve(cnf);
        const SolveResult slow = exhaustive_check(cnf);
        CHECK(fast.status == slow.status);
        if (fast.is_sat()) {
            CHECK(cnf_satisfied(cnf, fast.assignment));
        }
    }
}

TEST_CASE("NAE model count equals the number of proper 2-colorings") {
    std::mt19937 rng(77u);
    for (int trial = 0; trial < 20; ++trial) {
        const int vertices = 4 + static_cast<int>(rng() % 7);
        std::vector<std::vector<int>> edges;
        const int edge_count = 1 + static_cast<int>(rng() % 8);
        for (int e = 0; e < edge_count; ++e) {
            const int size = 2 + static_cast<int>(rng() % 3);
            std::vector<int> edge;
            while (static_cast<int>(edge.size()) < size) {
                const int v = 1 + static_cast<int>(rng() % vertices);
                bool fresh = true;
                for (int u : edge) fresh = fresh && u != v;
                if (fresh) edge.push_back(v);
            }
            edges.push_back(std::move(edge));
        }
        const Cnf cnf = encode_nae2(edges, vertices);
        CHECK(testoracle::count_models(cnf) ==
              testoracle::count_proper_2colorings(vertices, edges));
    }
}

TEST_CASE("DIMACS output format is pinned") {
    const Cnf cnf = make_cnf(2, {{1, 2}, {-1, -2}});
    CHECK(write_dimacs(cnf) == "p cnf 2 2\n1 2 0\n-1 -2 0\n");
    CHECK(write_dimacs(make_cnf(1, {{1}})) == "p cnf 1 1\n1 0\n");
}

TEST_CASE("DIMACS round-trips on canonical input") {
    const Cnf cnf = make_cnf(4, {{1, -2, 3}, {2, 4}, {-1, -4}, {3}});
    const std::string bytes = write_dimacs(cnf);
    const Cnf back = read_dimacs(bytes);
    CHECK(back.variable_count == cnf.variable_count);
    CHECK(back.clauses == cnf.clauses);
    CHECK(write_dimacs(back) == bytes);

    const Cnf unit = read_dimacs("p cnf 1 1\n1 0\n");
    REQUIRE(unit.clauses.size() == 1);
    CHECK(unit.clauses[0] == std::vector<int>{1});

    // comments and loose whitespace are tolerated
    const Cnf relaxed = read_dimacs("c comment\np cnf 2 1\nc another\n 2  1 0\n");
    CHECK(relaxed.clauses[0] == std::vector<int>{1, 2});
}

TEST_CASE("DIMACS parse errors carry line numbers") {
    const auto line_of = [](const char* text) {
        try {
            read_dimacs(text);
        } catch (const DimacsParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("p cnf x 1\n1 0\n") == 1);
    CHECK(line_of("1 0\n") == 1);                      // clause before header
    CHECK(line_of("p cnf 1 1\n2 0\n") == 2);           // out of range
    CHECK(line_of("p cnf 1 1\n1\n") == 2);             // unterminated
    CHECK(line_of("p cnf 1 2\n1 0\n") == 3);           // count mismatch
    CHECK(line_of("p cnf 1 1\np cnf 1 1\n1 0\n") == 2);  // duplicate header
}
