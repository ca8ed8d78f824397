#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramseyforge {

// Outcome of an exhaustive check of one claim. A failing universal claim
// always carries a replayable witness; partial means a size cap stopped the
// sweep before the claim was decided.
struct OracleReport {
    enum class Status { holds, fails, partial };

    std::string claim;
    std::vector<std::pair<std::string, std::string>> parameters;
    Status status = Status::partial;
    // For pair-coloring sweeps: colors {1,2} of the 2-subsets of [N] by rank.
    std::optional<std::vector<int>> witness_colors;
    std::uint64_t search_space = 0;
    std::string note;
};

// "Every 2-coloring of the pairs of [N] has a red K_l or a blue K_m."
// Sweeps all 2^C(N,2) colorings; refuses C(N,2) > 21.
OracleReport ramsey2_holds(int l, int m, int N);

// "P_k(2,2) <= N", decided through chi(Sh(N,k)) > 2. A failure carries a
// proper 2-coloring of the shift graph as witness.
OracleReport path_ramsey2_upper(int k, int N);

// "P_l(2,2,2) = s(l) + 1": compares the least N needing a 4th shift-graph
// color with the largest N still 3-colorable.
OracleReport p222_identity(int l, int N_max);

// "P_k(m,n) <= R_k(k+m-1, k+n-1)" for k = 2 at brute-force scale: both
// sides computed by coloring sweeps over [N] up to the cap.
OracleReport inequality_audit(int k, int m, int n, int N_cap = 7);

}  // namespace ramseyforge
