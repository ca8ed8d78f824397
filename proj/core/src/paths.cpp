#include "ramseyforge/paths.hpp"

#include <algorithm>
#include <stdexcept>

#include "coloring_io.hpp"
#include "ramseyforge/parallel.hpp"

namespace ramseyforge {

int color_label(int residue) {
    if (residue < 0 || residue > 2) {
        throw std::invalid_argument("color_label: expects residues mod 3");
    }
    return residue == 0 ? 3 : residue;
}

P23Result p23_color(const KSet& x, const ProperColoring& phi) {
    const int k = x.arity();
    if (k < 5) throw std::invalid_argument("p23_color: needs k >= 5");
    if (phi.k != k - 4) throw std::invalid_argument("p23_color: phi must color (k-4)-sets");
    int c[5];
    int i = 0;
    for (const KSet& w : windows(x, k - 4)) c[i++] = color_label(phi.color_of(w));
    if (c[1] < c[2] && c[2] > c[3]) return {PathColor::red, 1};
    if (c[0] > c[1] && c[1] > c[2] && c[2] < c[3] && c[3] < c[4]) return {PathColor::red, 2};
    return {PathColor::blue, 0};
}

PathColor p33_color(const KSet& x, const ProperColoring& phi) {
    const int k = x.arity();
    if (k < 2) throw std::invalid_argument("p33_color: needs k >= 2");
    if (phi.k != k - 1) throw std::invalid_argument("p33_color: phi must color (k-1)-sets");
    const auto w = windows(x, k - 1);
    const int first = color_label(phi.color_of(w[0]));
    const int second = color_label(phi.color_of(w[1]));
    if (first == second) {
        throw std::invalid_argument("p33_color: equal window colors, phi is not proper");
    }
    return first < second ? PathColor::red : PathColor::blue;
}

PathColor k1_2k1_color(const KSet& x, const ProperColoring& phi) {
    if (phi.k != x.arity()) throw std::invalid_argument("k1_2k1_color: phi must color k-sets");
    return color_label(phi.color_of(x)) == 1 ? PathColor::red : PathColor::blue;
}

namespace {

void require_proper_3coloring(const ProperColoring& phi, const char* who) {
    if (phi.c > 3) {
        throw std::invalid_argument(std::string(who) + ": phi must use at most 3 colors");
    }
    if (!is_proper_shift_coloring(phi)) {
        throw std::invalid_argument(std::string(who) + ": phi is not a proper shift coloring");
    }
}

}  // namespace

PathVerifyReport verify_p23(int N, int k, const ProperColoring& phi, int workers) {
    if (k < 5) throw std::invalid_argument("verify_p23: needs k >= 5");
    if (phi.n != N || phi.k != k - 4) {
        throw std::invalid_argument("verify_p23: phi must color the (k-4)-subsets of [N]");
    }

    PathVerifyReport report;
    // red scan: a red path of 2 is a (k+1)-set with both k-windows red
    if (N < k + 1) {
        report.red_vacuous = true;
    } else {
        const std::uint64_t total = n_choose_k(N, k + 1);
        report.red_scanned = total;
        const auto red_pair = [&](std::uint64_t r) {
            const auto w = windows(unrank(r, N, k + 1), k);
            return p23_color(w[0], phi).color == PathColor::red &&
                   p23_color(w[1], phi).color == PathColor::red;
        };
        if (const auto found = first_index(total, workers, red_pair)) {
            report.witness = PathWitness{"red", unrank(*found, N, k + 1)};
            return report;
        }
    }
    // blue scan: a blue path of 3 is a (k+2)-set with all three k-windows blue
    if (N < k + 2) {
        report.blue_vacuous = true;
        return report;
    }
    const std::uint64_t total = n_choose_k(N, k + 2);
    report.blue_scanned = total;
    const auto blue_triple = [&](std::uint64_t r) {
        const auto w = windows(unrank(r, N, k + 2), k);
        return p23_color(w[0], phi).color == PathColor::blue &&
               p23_color(w[1], phi).color == PathColor::blue &&
               p23_color(w[2], phi).color == PathColor::blue;
    };
    if (const auto found = first_index(total, workers, blue_triple)) {
        report.witness = PathWitness{"blue", unrank(*found, N, k + 2)};
    }
    return report;
}

PathVerifyReport verify_p33(int N, int k, const ProperColoring& phi, int workers) {
    if (k < 2) throw std::invalid_argument("verify_p33: needs k >= 2");
    if (phi.n != N || phi.k != k - 1) {
        throw std::invalid_argument("verify_p33: phi must color the (k-1)-subsets of [N]");
    }
    require_proper_3coloring(phi, "verify_p33");

    PathVerifyReport report;
    if (N < k + 2) {
        report.red_vacuous = true;
        report.blue_vacuous = true;
        return report;
    }
    const std::uint64_t total = n_choose_k(N, k + 2);
    report.red_scanned = total;
    report.blue_scanned = total;
    const auto mono_triple = [&](std::uint64_t r) {
        const auto w = windows(unrank(r, N, k + 2), k);
        const PathColor first = p33_color(w[0], phi);
        return p33_color(w[1], phi) == first && p33_color(w[2], phi) == first;
    };
    if (const auto found = first_index(total, workers, mono_triple)) {
        const KSet y = unrank(*found, N, k + 2);
        const auto w = windows(y, k);
        report.witness =
            PathWitness{p33_color(w[0], phi) == PathColor::red ? "red" : "blue", y};
    }
    return report;
}

PathVerifyReport verify_k1_2k1(int N, int k, const ProperColoring& phi, int workers) {
    if (phi.n != N || phi.k != k) {
        throw std::invalid_argument("verify_k1_2k1: phi must color the k-subsets of [N]");
    }

    PathVerifyReport report;
    // red scan: the shift-adjacent window pair of a (k+1)-set must not be
    // all red, and no (k+1)-set may have every k-subset red
    if (N < k + 1) {
        report.red_vacuous = true;
    } else {
        const std::uint64_t total = n_choose_k(N, k + 1);
        report.red_scanned = total;
        const auto red_bad = [&](std::uint64_t r) {
            const KSet y = unrank(r, N, k + 1);
            if (k1_2k1_color(y.without_position(k + 1), phi) == PathColor::red &&
                k1_2k1_color(y.without_position(1), phi) == PathColor::red) {
                return true;
            }
            for (int i = 1; i <= k + 1; ++i) {
                if (k1_2k1_color(y.without_position(i), phi) != PathColor::red) return false;
            }
            return true;
        };
        if (const auto found = first_index(total, workers, red_bad)) {
            report.witness = PathWitness{"red", unrank(*found, N, k + 1)};
            return report;
        }
    }
    // blue scan: no (2k+1)-set may have every k-subset blue
    if (N < 2 * k + 1) {
        report.blue_vacuous = true;
        return report;
    }
    const std::uint64_t total = n_choose_k(N, 2 * k + 1);
    report.blue_scanned = total;
    const auto all_blue = [&](std::uint64_t r) {
        const KSet y = unrank(r, N, 2 * k + 1);
        for (const KSet& sub : ksubsets(2 * k + 1, k)) {
            std::vector<int> elems;
            elems.reserve(static_cast<std::size_t>(k));
            for (int i = 1; i <= k; ++i) elems.push_back(y.element(sub.element(i)));
            if (k1_2k1_color(KSet(std::move(elems)), phi) != PathColor::blue) return false;
        }
        return true;
    };
    if (const auto found = first_index(total, workers, all_blue)) {
        report.witness = PathWitness{"blue", unrank(*found, N, 2 * k + 1)};
    }
    return report;
}

std::vector<KSet> odd_cycle_in_shift(const KSet& y, int k) {
    if (y.arity() != 2 * k + 1) {
        throw std::invalid_argument("odd_cycle_in_shift: |Y| must equal 2k+1");
    }
    // induced undirected shift graph on the k-subsets of Y
    const auto verts = ksubsets(2 * k + 1, k);
    const int m = static_cast<int>(verts.size());
    const auto realize = [&](int idx) {
        std::vector<int> elems;
        elems.reserve(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i) elems.push_back(y.element(verts[static_cast<std::size_t>(idx)].element(i)));
        return KSet(std::move(elems));
    };
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (int u = 0; u < m; ++u) {
        for (int v = 0; v < m; ++v) {
            if (u != v && is_shift(verts[static_cast<std::size_t>(u)], verts[static_cast<std::size_t>(v)])) {
                adj[static_cast<std::size_t>(u)].push_back(v);
                adj[static_cast<std::size_t>(v)].push_back(u);
            }
        }
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }

    // BFS 2-coloring from the first vertex; an edge inside one layer parity
    // closes an odd cycle through the two ancestor paths.
    std::vector<int> parent(static_cast<std::size_t>(m), -2);
    std::vector<int> depth(static_cast<std::size_t>(m), -1);
    std::vector<int> queue;
    queue.push_back(0);
    parent[0] = -1;
    depth[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (depth[static_cast<std::size_t>(v)] == -1) {
                depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
                parent[static_cast<std::size_t>(v)] = u;
                queue.push_back(v);
            }
        }
    }
    for (int u = 0; u < m; ++u) {
        if (depth[static_cast<std::size_t>(u)] == -1) continue;
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (v <= u || depth[static_cast<std::size_t>(v)] == -1) continue;
            if ((depth[static_cast<std::size_t>(u)] & 1) != (depth[static_cast<std::size_t>(v)] & 1)) continue;
            // climb to the common ancestor
            std::vector<int> left{u}, right{v};
            int a = u, b = v;
            while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
                a = parent[static_cast<std::size_t>(a)];
                left.push_back(a);
            }
            while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
                b = parent[static_cast<std::size_t>(b)];
                right.push_back(b);
            }
            while (a != b) {
                a = parent[static_cast<std::size_t>(a)];
                left.push_back(a);
                b = parent[static_cast<std::size_t>(b)];
                right.push_back(b);
            }
            std::vector<KSet> cycle;
            for (int idx : left) cycle.push_back(realize(idx));
            for (std::size_t i = right.size() - 1; i-- > 0;) {
                cycle.push_back(realize(right[i]));
            }
            return cycle;
        }
    }
    throw std::logic_error("odd_cycle_in_shift: no odd cycle found, which contradicts N = 2k+1");
}

PathColoring build_path_coloring(int N, int k, PathVariant variant, const ProperColoring& phi) {
    PathColoring pc;
    pc.n = N;
    pc.k = k;
    pc.variant = variant;
    pc.colors.reserve(n_choose_k(N, k));
    for (const KSet& x : ksubsets(N, k)) {
        PathColor color{};
        switch (variant) {
            case PathVariant::p23: color = p23_color(x, phi).color; break;
            case PathVariant::p33: color = p33_color(x, phi); break;
            case PathVariant::k1_2k1: color = k1_2k1_color(x, phi); break;
        }
        pc.colors.push_back(color == PathColor::red ? 1 : 2);
    }
    return pc;
}

std::string write_path_coloring(const PathColoring& pc) {
    return write_two_coloring_file("pathcoloring", pc.n, pc.k, pc.colors);
}

std::vector<int> read_path_coloring(std::string_view text, int& n_out, int& k_out) {
    return read_two_coloring_file("pathcoloring", text, n_out, k_out);
}

}  // namespace ramseyforge
