#pragma once

#include <vector>

#include "ramseyforge/cnf.hpp"

namespace ramseyforge {

struct SolveResult {
    enum class Status { sat, unsat };
    Status status = Status::unsat;
    // 1-based by variable; meaningful only when sat. Always total.
    std::vector<bool> assignment;

    bool is_sat() const { return status == Status::sat; }
};

// Complete, deterministic DPLL: unit propagation, pure-literal elimination,
// branching on the lowest-index unassigned variable with true tried first.
// A sat result is re-checked against every clause before being returned.
SolveResult solve(const Cnf& cnf);

// Brute force over all 2^variable_count assignments; the independent oracle
// for the solver. Refuses instances above 25 variables.
SolveResult exhaustive_check(const Cnf& cnf);

}  // namespace ramseyforge
