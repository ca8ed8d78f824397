#include "ramseyforge/shift.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

#include "ramseyforge/cnf.hpp"
#include "ramseyforge/solver.hpp"

namespace ramseyforge {

bool is_proper_shift_coloring(const ProperColoring& phi) {
    if (phi.colors.size() != n_choose_k(phi.n, phi.k)) return false;
    for (int color : phi.colors) {
        if (color < 0 || color >= phi.c) return false;
    }
    for (const auto& [from, to] : shift_edges(phi.n, phi.k)) {
        if (phi.colors[from] == phi.colors[to]) return false;
    }
    return true;
}

ProperColoring bit_color_pairs(int N) {
    if (N < 2) throw std::invalid_argument("bit_color_pairs: need N >= 2");
    ProperColoring phi;
    phi.n = N;
    phi.k = 2;
    phi.colors.reserve(n_choose_k(N, 2));
    int max_color = 0;
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            const unsigned diff = static_cast<unsigned>(i - 1) ^ static_cast<unsigned>(j - 1);
            const int color = std::bit_width(diff) - 1;
            max_color = std::max(max_color, color);
            phi.colors.push_back(color);
        }
    }
    phi.c = max_color + 1;
    return phi;
}

ProperColoring complete_color_singletons(int N) {
    if (N < 1 || N > 3) {
        throw std::invalid_argument(
            "complete_color_singletons: Sh(N,1) is complete, three colors need N <= 3");
    }
    ProperColoring phi;
    phi.n = N;
    phi.k = 1;
    phi.c = N;
    for (int i = 0; i < N; ++i) phi.colors.push_back(i);
    return phi;
}

namespace {

std::vector<std::pair<int, int>> shift_edges_1based(int N, int k) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [from, to] : shift_edges(N, k)) {
        edges.emplace_back(static_cast<int>(from) + 1, static_cast<int>(to) + 1);
    }
    return edges;
}

}  // namespace

std::optional<ProperColoring> find_coloring_sat(int N, int k, int c) {
    if (k < 1 || k > N || c < 1) throw std::invalid_argument("find_coloring_sat: bad parameters");
    const std::uint64_t vertices = n_choose_k(N, k);
    if (vertices * static_cast<std::uint64_t>(c) > 20000) {
        throw std::invalid_argument("find_coloring_sat: refused, instance exceeds 20000 variables");
    }
    const Cnf cnf = encode_graph_kcolor(shift_edges_1based(N, k), static_cast<int>(vertices), c);
    const SolveResult result = solve(cnf);
    if (!result.is_sat()) return std::nullopt;

    ProperColoring phi;
    phi.n = N;
    phi.k = k;
    phi.c = c;
    phi.colors = decode_kcolor(result.assignment, static_cast<int>(vertices), c);
    if (!is_proper_shift_coloring(phi)) {
        throw std::logic_error("find_coloring_sat: decoded coloring failed properness re-check");
    }
    return phi;
}

std::optional<int> chromatic_shift(int N, int k, int c_max) {
    for (int c = 1; c <= c_max; ++c) {
        if (find_coloring_sat(N, k, c)) return c;
    }
    return std::nullopt;
}

SExactResult s_exact_upto(int k, int N_max) {
    SExactResult out;
    for (int N = k; N <= N_max; ++N) {
        if (n_choose_k(N, k) * 3 > 20000) break;  // cap reached; result is partial
        if (find_coloring_sat(N, k, 3)) {
            out.value = N;
        } else {
            out.exact = true;
            out.probed_to = N;
            return out;
        }
        out.probed_to = N;
    }
    return out;
}

std::string write_shift_coloring(const ProperColoring& phi) {
    if (phi.colors.size() != n_choose_k(phi.n, phi.k)) {
        throw std::invalid_argument("write_shift_coloring: coloring is not total");
    }
    std::string out = "shiftcoloring " + std::to_string(phi.n) + " " + std::to_string(phi.k) +
                      " " + std::to_string(phi.c) + "\n";
    std::uint64_t r = 0;
    for (const KSet& x : ksubsets(phi.n, phi.k)) {
        for (int i = 1; i <= phi.k; ++i) {
            out += std::to_string(x.element(i));
            out += ' ';
        }
        out += std::to_string(phi.colors[r++]);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<int> parse_numbers(std::string_view line, std::size_t line_no) {
    std::vector<int> numbers;
    std::size_t at = 0;
    while (at < line.size()) {
        while (at < line.size() && (line[at] == ' ' || line[at] == '\r')) ++at;
        const std::size_t start = at;
        while (at < line.size() && line[at] != ' ' && line[at] != '\r') ++at;
        if (at > start) {
            int value = 0;
            const auto* first = line.data() + start;
            const auto* last = line.data() + at;
            const auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc{} || ptr != last) {
                throw std::invalid_argument("coloring file: bad number on line " +
                                            std::to_string(line_no));
            }
            numbers.push_back(value);
        }
    }
    return numbers;
}

}  // namespace

ProperColoring read_shift_coloring(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::size_t end = eol == std::string_view::npos ? text.size() : eol;
        lines.push_back(text.substr(pos, end - pos));
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
    }
    if (lines.empty()) throw std::invalid_argument("shift coloring: empty file");
    constexpr std::string_view kHeader = "shiftcoloring ";
    if (lines[0].substr(0, kHeader.size()) != kHeader) {
        throw std::invalid_argument("shift coloring: bad header");
    }
    const auto header = parse_numbers(lines[0].substr(kHeader.size()), 1);
    if (header.size() != 3) throw std::invalid_argument("shift coloring: bad header");

    ProperColoring phi;
    phi.n = header[0];
    phi.k = header[1];
    phi.c = header[2];
    if (phi.k < 1 || phi.k > phi.n || phi.c < 1) {
        throw std::invalid_argument("shift coloring: bad header dimensions");
    }
    const std::uint64_t expect = n_choose_k(phi.n, phi.k);
    if (lines.size() != expect + 1) {
        throw std::invalid_argument("shift coloring: wrong number of lines");
    }
    phi.colors.assign(expect, 0);
    for (std::uint64_t r = 0; r < expect; ++r) {
        const auto numbers = parse_numbers(lines[r + 1], r + 2);
        if (numbers.size() != static_cast<std::size_t>(phi.k) + 1) {
            throw std::invalid_argument("shift coloring: wrong arity on line " +
                                        std::to_string(r + 2));
        }
        const KSet x(std::vector<int>(numbers.begin(), numbers.end() - 1));
        if (rank(x, phi.n) != r) {
            throw std::invalid_argument("shift coloring: sets out of order on line " +
                                        std::to_string(r + 2));
        }
        const int color = numbers.back();
        if (color < 0 || color >= phi.c) {
            throw std::invalid_argument("shift coloring: color out of range on line " +
                                        std::to_string(r + 2));
        }
        phi.colors[r] = color;
    }
    return phi;
}

}  // namespace ramseyforge
