#include "ramseyforge/ramsey.hpp"

#include <stdexcept>

#include "coloring_io.hpp"
#include "ramseyforge/parallel.hpp"

namespace ramseyforge {

ColorVector lambda_map(const KSet& x, const ProperColoring& phi, int parts) {
    if (parts < 1 || x.arity() % parts != 0) {
        throw std::invalid_argument("lambda_map: parts must divide the arity");
    }
    if (x.arity() / parts != phi.k) {
        throw std::invalid_argument("lambda_map: phi arity does not match the segment size");
    }
    if (x.max() > phi.n) {
        throw std::invalid_argument("lambda_map: set exceeds the domain of phi");
    }
    ColorVector v;
    v.coords.reserve(static_cast<std::size_t>(parts));
    for (const KSet& segment : segments(x, parts)) {
        v.coords.push_back(phi.color_of(segment));
    }
    return v;
}

std::array<KSet, 5> special_subsets(const KSet& y, int l) {
    if (l < 1 || y.arity() != 4 * l + 1) {
        throw std::invalid_argument("special_subsets: |Y| must equal 4l+1");
    }
    return {y.without_position(1), y.without_position(l + 1), y.without_position(2 * l + 1),
            y.without_position(3 * l + 1), y.without_position(4 * l + 1)};
}

namespace {

KSet slice(const KSet& y, int first, int last) {
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(last - first + 1));
    for (int i = first; i <= last; ++i) elems.push_back(y.element(i));
    return KSet(std::move(elems));
}

}  // namespace

BlockDecomposition blocks(const KSet& y, int l) {
    if (l < 1 || y.arity() != 4 * l + 1) {
        throw std::invalid_argument("blocks: |Y| must equal 4l+1");
    }
    BlockDecomposition out;
    for (int j = 0; j < 4; ++j) {
        out.a[static_cast<std::size_t>(j)] = slice(y, j * l + 2, (j + 1) * l + 1);
        out.b[static_cast<std::size_t>(j)] = slice(y, j * l + 1, (j + 1) * l);
    }
    return out;
}

RamseyColoring build_coloring(int N, int k, const ProperColoring& phi,
                              const std::vector<int>& psi, int parts) {
    if (parts < 2 || k % parts != 0) {
        throw std::invalid_argument("build_coloring: parts must divide k");
    }
    const int segment = k / parts;
    if (segment == 1 && N > 3) {
        throw std::invalid_argument(
            "build_coloring: segment size 1 needs N <= 3, Sh(N,1) is the complete graph K_N");
    }
    if (phi.k != segment || phi.n != N) {
        throw std::invalid_argument("build_coloring: phi must color the segment-size subsets of [N]");
    }
    std::uint64_t cube = 1;
    for (int i = 0; i < parts; ++i) cube *= static_cast<std::uint64_t>(phi.c);
    if (psi.size() != cube) {
        throw std::invalid_argument("build_coloring: psi is not total on the color cube");
    }
    for (int color : psi) {
        if (color != 1 && color != 2) {
            throw std::invalid_argument("build_coloring: psi colors must be 1 or 2");
        }
    }

    RamseyColoring rc;
    rc.n = N;
    rc.k = k;
    rc.parts = parts;
    rc.c = phi.c;
    rc.phi = phi;
    rc.psi = psi;
    rc.colors.reserve(n_choose_k(N, k));
    for (const KSet& x : ksubsets(N, k)) {
        rc.colors.push_back(psi[color_vector_index(lambda_map(x, phi, parts), phi.c)]);
    }
    return rc;
}

CliqueScanOutcome mono_clique_witness(int N, int k, const std::vector<int>& colors, int q,
                                      int workers) {
    if (q < k + 1) throw std::invalid_argument("mono_clique_witness: need q >= k+1");
    if (colors.size() != n_choose_k(N, k)) {
        throw std::invalid_argument("mono_clique_witness: coloring is not total");
    }
    CliqueScanOutcome out;
    if (q > N) {
        out.vacuous = true;
        return out;
    }
    const std::uint64_t total = n_choose_k(N, q);
    out.scanned = total;
    const auto mono = [&](std::uint64_t r) {
        const KSet y = unrank(r, N, q);
        int shared = -1;
        for (const KSet& sub : ksubsets(q, k)) {
            // map the index subset through y
            std::vector<int> elems;
            elems.reserve(static_cast<std::size_t>(k));
            for (int i = 1; i <= k; ++i) elems.push_back(y.element(sub.element(i)));
            const int color = colors[rank(KSet(std::move(elems)), N)];
            if (shared == -1) shared = color;
            else if (shared != color) return false;
        }
        return true;
    };
    const auto found = first_index(total, workers, mono);
    if (found) out.witness = unrank(*found, N, q);
    return out;
}

CliqueScanOutcome verify_no_mono_clique(const RamseyColoring& rc, int q, int workers) {
    return mono_clique_witness(rc.n, rc.k, rc.colors, q, workers);
}

SpecialFiveOutcome verify_special_five(const RamseyColoring& rc, int workers) {
    if (rc.parts != 4) {
        throw std::invalid_argument("verify_special_five: defined for parts = 4");
    }
    const int l = rc.k / 4;
    SpecialFiveOutcome out;
    if (rc.k + 1 > rc.n) return out;  // no supersets at all
    const std::uint64_t total = n_choose_k(rc.n, rc.k + 1);
    out.scanned = total;
    const auto mono = [&](std::uint64_t r) {
        const KSet y = unrank(r, rc.n, rc.k + 1);
        const auto subsets = special_subsets(y, l);
        const int first = rc.color_of(subsets[0]);
        for (int j = 1; j < 5; ++j) {
            if (rc.color_of(subsets[static_cast<std::size_t>(j)]) != first) return false;
        }
        return true;
    };
    const auto found = first_index(total, workers, mono);
    if (found) {
        const KSet y = unrank(*found, rc.n, rc.k + 1);
        const auto subsets = special_subsets(y, l);
        SpecialFiveOutcome::Witness w{y, {}};
        for (int j = 0; j < 5; ++j) {
            w.colors[static_cast<std::size_t>(j)] = rc.color_of(subsets[static_cast<std::size_t>(j)]);
        }
        out.witness = std::move(w);
    }
    return out;
}

std::string write_ramsey_coloring(int N, int k, const std::vector<int>& colors) {
    return write_two_coloring_file("ramseycoloring", N, k, colors);
}

std::vector<int> read_ramsey_coloring(std::string_view text, int& n_out, int& k_out) {
    return read_two_coloring_file("ramseycoloring", text, n_out, k_out);
}

}  // namespace ramseyforge
