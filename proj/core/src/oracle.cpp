#include "ramseyforge/oracle.hpp"

#include <stdexcept>

#include "ramseyforge/kset.hpp"
#include "ramseyforge/shift.hpp"

namespace ramseyforge {

namespace {

std::string to_string(bool b) { return b ? "true" : "false"; }

// Pair-rank bitmasks of all the size-q cliques of [N].
std::vector<std::uint32_t> clique_masks(int N, int q) {
    std::vector<std::uint32_t> masks;
    if (q > N) return masks;
    for (const KSet& s : ksubsets(N, q)) {
        std::uint32_t mask = 0;
        for (int i = 1; i <= q; ++i) {
            for (int j = i + 1; j <= q; ++j) {
                mask |= 1u << rank(KSet({s.element(i), s.element(j)}), N);
            }
        }
        masks.push_back(mask);
    }
    return masks;
}

// Pair-rank bitmasks of the window pairs of every (m+1)-subset: the shift
// paths on m vertices of 2-sets.
std::vector<std::uint32_t> path_masks(int N, int m) {
    std::vector<std::uint32_t> masks;
    if (m + 1 > N) return masks;
    for (const KSet& s : ksubsets(N, m + 1)) {
        std::uint32_t mask = 0;
        for (int i = 1; i <= m; ++i) {
            mask |= 1u << rank(KSet({s.element(i), s.element(i + 1)}), N);
        }
        masks.push_back(mask);
    }
    return masks;
}

bool any_all_red(const std::vector<std::uint32_t>& masks, std::uint32_t red) {
    for (std::uint32_t mask : masks) {
        if ((red & mask) == mask) return true;
    }
    return false;
}

bool any_all_blue(const std::vector<std::uint32_t>& masks, std::uint32_t red) {
    for (std::uint32_t mask : masks) {
        if ((red & mask) == 0) return true;
    }
    return false;
}

std::vector<int> colors_from_bits(std::uint32_t red, int edge_count) {
    std::vector<int> colors(static_cast<std::size_t>(edge_count));
    for (int e = 0; e < edge_count; ++e) {
        colors[static_cast<std::size_t>(e)] = (red >> e) & 1u ? 1 : 2;
    }
    return colors;
}

}  // namespace

OracleReport ramsey2_holds(int l, int m, int N) {
    if (l < 1 || m < 1 || N < 1) throw std::invalid_argument("ramsey2_holds: bad parameters");
    const std::uint64_t edges = n_choose_k(N, 2);
    if (edges > 21) {
        throw std::invalid_argument("ramsey2_holds: refused, C(N,2) exceeds 21");
    }

    OracleReport report;
    report.claim = "ramsey2_holds";
    report.parameters = {{"l", std::to_string(l)}, {"m", std::to_string(m)}, {"N", std::to_string(N)}};
    const auto red_masks = clique_masks(N, l);
    const auto blue_masks = clique_masks(N, m);
    const std::uint64_t total = 1ull << edges;
    report.search_space = total;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const auto red = static_cast<std::uint32_t>(bits);
        if (!any_all_red(red_masks, red) && !any_all_blue(blue_masks, red)) {
            report.status = OracleReport::Status::fails;
            report.witness_colors = colors_from_bits(red, static_cast<int>(edges));
            return report;
        }
    }
    report.status = OracleReport::Status::holds;
    return report;
}

OracleReport path_ramsey2_upper(int k, int N) {
    OracleReport report;
    report.claim = "path_ramsey2_upper";
    report.parameters = {{"k", std::to_string(k)}, {"N", std::to_string(N)}};
    report.search_space = n_choose_k(N, k);

    const auto coloring = find_coloring_sat(N, k, 2);
    if (!coloring) {
        report.status = OracleReport::Status::holds;
        return report;
    }
    // A proper 2-coloring of Sh(N,k) is exactly a coloring of k-sets with no
    // monochromatic 2-path.
    report.status = OracleReport::Status::fails;
    std::vector<int> witness(coloring->colors.size());
    for (std::size_t i = 0; i < witness.size(); ++i) witness[i] = coloring->colors[i] + 1;
    report.witness_colors = std::move(witness);
    return report;
}

OracleReport p222_identity(int l, int N_max) {
    if (l < 1 || N_max < l) throw std::invalid_argument("p222_identity: bad parameters");
    OracleReport report;
    report.claim = "p222_identity";
    report.parameters = {{"l", std::to_string(l)}, {"N_max", std::to_string(N_max)}};

    std::optional<int> first_uncolorable;  // least N with chi(Sh(N,l)) > 3
    std::uint64_t probes = 0;
    for (int N = l; N <= N_max + 1; ++N) {
        if (n_choose_k(N, l) * 3 > 20000) break;
        ++probes;
        if (!find_coloring_sat(N, l, 3)) {
            first_uncolorable = N;
            break;
        }
    }
    const SExactResult s = s_exact_upto(l, N_max);
    report.search_space = probes + static_cast<std::uint64_t>(s.probed_to);

    if (!first_uncolorable || !s.exact) {
        report.status = OracleReport::Status::partial;
        report.note = "size caps stopped the sweep before both sides were decided";
        return report;
    }
    const bool equal = *first_uncolorable == s.value + 1;
    report.status = equal ? OracleReport::Status::holds : OracleReport::Status::fails;
    report.note = "P_l(2,2,2) = " + std::to_string(*first_uncolorable) +
                  ", s(l)+1 = " + std::to_string(s.value + 1);
    return report;
}

OracleReport inequality_audit(int k, int m, int n, int N_cap) {
    if (k != 2) throw std::invalid_argument("inequality_audit: brute force only covers k = 2");
    if (m < 1 || n < 1 || m > 3 || n > 3) {
        throw std::invalid_argument("inequality_audit: need 1 <= m, n <= 3");
    }
    if (N_cap > 7) throw std::invalid_argument("inequality_audit: cap exceeds the sweep bound");

    OracleReport report;
    report.claim = "inequality_audit";
    report.parameters = {{"k", std::to_string(k)},
                         {"m", std::to_string(m)},
                         {"n", std::to_string(n)},
                         {"N_cap", std::to_string(N_cap)}};

    std::optional<int> path_min;    // P_2(m,n)
    std::optional<int> clique_min;  // R_2(m+1,n+1)
    std::optional<std::uint32_t> path_escape_at_clique_min;
    std::uint64_t swept = 0;

    for (int N = 2; N <= N_cap; ++N) {
        const std::uint64_t edges = n_choose_k(N, 2);
        const std::uint64_t total = 1ull << edges;
        const auto red_paths = path_masks(N, m);
        const auto blue_paths = path_masks(N, n);
        const auto red_cliques = clique_masks(N, m + 1);
        const auto blue_cliques = clique_masks(N, n + 1);

        bool path_property = true;
        bool clique_property = true;
        std::optional<std::uint32_t> path_escape;
        for (std::uint64_t bits = 0; bits < total && (path_property || clique_property); ++bits) {
            ++swept;
            const auto red = static_cast<std::uint32_t>(bits);
            if (path_property && !any_all_red(red_paths, red) && !any_all_blue(blue_paths, red)) {
                path_property = false;
                path_escape = red;
            }
            if (clique_property && !any_all_red(red_cliques, red) &&
                !any_all_blue(blue_cliques, red)) {
                clique_property = false;
            }
        }
        if (path_property && !path_min) path_min = N;
        if (clique_property && !clique_min) {
            clique_min = N;
            path_escape_at_clique_min = path_escape;
        }
        if (path_min && clique_min) break;
    }
    report.search_space = swept;

    if (path_min && clique_min) {
        report.status = *path_min <= *clique_min ? OracleReport::Status::holds
                                                 : OracleReport::Status::fails;
        report.note = "P = " + std::to_string(*path_min) + ", R = " + std::to_string(*clique_min);
        if (report.status == OracleReport::Status::fails && path_escape_at_clique_min) {
            report.witness_colors = colors_from_bits(
                *path_escape_at_clique_min, static_cast<int>(n_choose_k(*clique_min, 2)));
        }
        return report;
    }
    if (path_min && !clique_min) {
        // P decided within the cap while R exceeds it, so P < R.
        report.status = OracleReport::Status::holds;
        report.note = "P = " + std::to_string(*path_min) + ", R > " + std::to_string(N_cap);
        return report;
    }
    report.status = OracleReport::Status::partial;
    report.note = std::string("P > ") + std::to_string(N_cap) +
                  (clique_min ? ", R = " + std::to_string(*clique_min)
                              : ", R > " + std::to_string(N_cap));
    return report;
}

}  // namespace ramseyforge
