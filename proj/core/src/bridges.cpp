#include "ramseyforge/bridges.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "ramseyforge/parallel.hpp"
#include "ramseyforge/solver.hpp"

namespace ramseyforge {

std::string ColorVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords[i]);
    }
    out += ')';
    return out;
}

std::uint64_t color_vector_index(const ColorVector& v, int c) {
    std::uint64_t index = 0;
    for (int coord : v.coords) {
        if (coord < 0 || coord >= c) {
            throw std::invalid_argument("color_vector_index: coordinate out of range");
        }
        index = index * static_cast<std::uint64_t>(c) + static_cast<std::uint64_t>(coord);
    }
    return index;
}

ColorVector color_vector_at(std::uint64_t index, int n, int c) {
    ColorVector v;
    v.coords.assign(static_cast<std::size_t>(n), 0);
    for (int i = n; i-- > 0;) {
        v.coords[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(c));
        index /= static_cast<std::uint64_t>(c);
    }
    if (index != 0) throw std::invalid_argument("color_vector_at: index out of range");
    return v;
}

std::vector<ColorVector> bridge_members(const ColorVector& a, const ColorVector& b, int c) {
    const int n = a.dim();
    if (n < 2 || b.dim() != n) {
        throw std::invalid_argument("bridge_members: endpoints must share a dimension >= 2");
    }
    for (int i = 0; i < n; ++i) {
        const int ai = a.coords[static_cast<std::size_t>(i)];
        const int bi = b.coords[static_cast<std::size_t>(i)];
        if (ai < 0 || ai >= c || bi < 0 || bi >= c) {
            throw std::invalid_argument("bridge_members: coordinate out of range");
        }
        if (ai == bi) {
            throw std::invalid_argument(
                "bridge_members: bridge degeneracy, endpoints agree at coordinate " +
                std::to_string(i + 1));
        }
    }
    std::vector<ColorVector> members;
    members.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        ColorVector m = a;
        for (int i = n - j; i < n; ++i) {
            m.coords[static_cast<std::size_t>(i)] = b.coords[static_cast<std::size_t>(i)];
        }
        members.push_back(std::move(m));
    }
    return members;
}

std::uint64_t bridge_count(int n, int c) {
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) {
        count *= static_cast<std::uint64_t>(c) * static_cast<std::uint64_t>(c - 1);
    }
    return count;
}

Bridge bridge_at(std::uint64_t index, int n, int c) {
    if (n < 2 || c < 2) throw std::invalid_argument("bridge_at: need n >= 2 and c >= 2");
    // index = a_index * (c-1)^n + offset, where offset encodes b in base c-1
    // (digit d gives coordinate d, skipping the value taken by a).
    std::uint64_t b_span = 1;
    for (int i = 0; i < n; ++i) b_span *= static_cast<std::uint64_t>(c - 1);
    const std::uint64_t a_index = index / b_span;
    std::uint64_t offset = index % b_span;

    Bridge bridge;
    bridge.a = color_vector_at(a_index, n, c);
    bridge.b.coords.assign(static_cast<std::size_t>(n), 0);
    for (int i = n; i-- > 0;) {
        const int digit = static_cast<int>(offset % static_cast<std::uint64_t>(c - 1));
        offset /= static_cast<std::uint64_t>(c - 1);
        const int skip = bridge.a.coords[static_cast<std::size_t>(i)];
        bridge.b.coords[static_cast<std::size_t>(i)] = digit < skip ? digit : digit + 1;
    }
    bridge.members = bridge_members(bridge.a, bridge.b, c);
    return bridge;
}

std::vector<Bridge> enumerate_bridges(int n, int c) {
    if (n < 2 || c < 2) throw std::invalid_argument("enumerate_bridges: need n >= 2 and c >= 2");
    const std::uint64_t count = bridge_count(n, c);
    std::vector<Bridge> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(bridge_at(i, n, c));
    return out;
}

std::optional<std::pair<ColorVector, ColorVector>> is_bridge_set(
    const std::vector<ColorVector>& s, int c) {
    if (s.empty()) return std::nullopt;
    const int n = s.front().dim();
    if (static_cast<int>(s.size()) != n + 1) return std::nullopt;
    for (const auto& v : s) {
        if (v.dim() != n) return std::nullopt;
    }
    std::vector<ColorVector> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

    // Endpoint candidates come from the set itself; try them in
    // lexicographic (a, b) order.
    for (const ColorVector& a : sorted) {
        for (const ColorVector& b : sorted) {
            if (a == b) continue;
            bool disagree = true;
            for (int i = 0; i < n && disagree; ++i) {
                disagree = a.coords[static_cast<std::size_t>(i)] != b.coords[static_cast<std::size_t>(i)];
            }
            if (!disagree) continue;
            std::vector<ColorVector> members = bridge_members(a, b, c);
            std::sort(members.begin(), members.end());
            if (members == sorted) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

int chi_key(const ColorVector& v) {
    if (v.dim() != 4) throw std::invalid_argument("chi_key: expects vectors of Z_3^4");
    for (int coord : v.coords) {
        if (coord < 0 || coord > 2) throw std::invalid_argument("chi_key: residues must be mod 3");
    }
    const int full = (v.coords[0] + v.coords[1] + v.coords[2] + v.coords[3]) % 3;
    const int alternating = (v.coords[0] + v.coords[2]) % 3;
    return (full == 0 || alternating == 0) ? 1 : 2;
}

std::vector<int> chi_key_table() {
    std::vector<int> table(81);
    for (std::uint64_t i = 0; i < 81; ++i) {
        table[i] = chi_key(color_vector_at(i, 4, 3));
    }
    return table;
}

std::optional<Bridge> has_mono_bridge(const std::vector<int>& coloring, int n, int c,
                                      int workers) {
    std::uint64_t points = 1;
    for (int i = 0; i < n; ++i) points *= static_cast<std::uint64_t>(c);
    if (coloring.size() != points) {
        throw std::invalid_argument("has_mono_bridge: coloring is not total on Z_c^n");
    }
    for (int color : coloring) {
        if (color != 1 && color != 2) {
            throw std::invalid_argument("has_mono_bridge: colors must be 1 or 2");
        }
    }
    const auto mono = [&](std::uint64_t index) {
        const Bridge bridge = bridge_at(index, n, c);
        const int first = coloring[color_vector_index(bridge.members.front(), c)];
        for (const auto& member : bridge.members) {
            if (coloring[color_vector_index(member, c)] != first) return false;
        }
        return true;
    };
    const auto found = first_index(bridge_count(n, c), workers, mono);
    if (!found) return std::nullopt;
    return bridge_at(*found, n, c);
}

Cnf encode_bridge_cnf(int n, int c) {
    if (n < 2 || c < 2) throw std::invalid_argument("encode_bridge_cnf: need n >= 2 and c >= 2");
    std::uint64_t points = 1;
    for (int i = 0; i < n; ++i) points *= static_cast<std::uint64_t>(c);
    if (points > 1024) {
        throw std::invalid_argument("encode_bridge_cnf: refused, c^n exceeds 1024 variables");
    }
    const std::uint64_t count = bridge_count(n, c);
    std::vector<std::vector<int>> edges;
    edges.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Bridge bridge = bridge_at(i, n, c);
        std::vector<int> edge;
        edge.reserve(bridge.members.size());
        for (const auto& member : bridge.members) {
            edge.push_back(static_cast<int>(1 + color_vector_index(member, c)));
        }
        edges.push_back(std::move(edge));
    }
    return encode_nae2(edges, static_cast<int>(points));
}

namespace {

// The bridge hypergraph is invariant under any alphabet permutation applied
// to every coordinate at once, and NAE clauses are invariant under the
// color flip. Lex-leader clauses over a short vertex prefix cut the search
// to (near-)orbit representatives; any surviving model is still a model of
// the plain encoding, and unsatisfiability transfers to the full formula
// because every coloring orbit contains a lex-minimal member.
constexpr int kLexPrefix = 32;

std::vector<int> diagonal_vertex_map(int n, int c, const std::vector<int>& sigma) {
    std::uint64_t points = 1;
    for (int i = 0; i < n; ++i) points *= static_cast<std::uint64_t>(c);
    std::vector<int> map(points);
    for (std::uint64_t v = 0; v < points; ++v) {
        ColorVector cv = color_vector_at(v, n, c);
        for (auto& coord : cv.coords) coord = sigma[static_cast<std::size_t>(coord)];
        map[v] = static_cast<int>(color_vector_index(cv, c));
    }
    return map;
}

// Clauses for "assignment <=_lex its image", truncated to the prefix.
void append_lex_leader(std::vector<std::vector<int>>& clauses, const std::vector<int>& vertex_map,
                       bool flip_colors, int& next_var) {
    const int positions = std::min<int>(kLexPrefix, static_cast<int>(vertex_map.size()));
    const int sign = flip_colors ? -1 : 1;
    int prev_eq = 0;
    for (int i = 0; i < positions; ++i) {
        const int xi = 1 + i;
        const int yi = sign * (1 + vertex_map[static_cast<std::size_t>(i)]);
        if (prev_eq == 0) clauses.push_back({-xi, yi});
        else clauses.push_back({-prev_eq, -xi, yi});
        if (i + 1 == positions) break;
        const int eq = ++next_var;
        if (prev_eq == 0) {
            clauses.push_back({-eq, -xi, yi});
            clauses.push_back({-eq, xi, -yi});
            clauses.push_back({eq, xi, yi});
            clauses.push_back({eq, -xi, -yi});
        } else {
            clauses.push_back({-eq, prev_eq});
            clauses.push_back({-eq, -xi, yi});
            clauses.push_back({-eq, xi, -yi});
            clauses.push_back({eq, -prev_eq, xi, yi});
            clauses.push_back({eq, -prev_eq, -xi, -yi});
        }
        prev_eq = eq;
    }
}

Cnf symmetry_broken_bridge_cnf(int n, int c) {
    const Cnf base = encode_bridge_cnf(n, c);
    std::vector<std::vector<int>> clauses = base.clauses;
    int next_var = base.variable_count;

    std::vector<int> sigma(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) sigma[static_cast<std::size_t>(i)] = i;
    std::vector<int> identity(static_cast<std::size_t>(base.variable_count));
    for (int i = 0; i < base.variable_count; ++i) identity[static_cast<std::size_t>(i)] = i;
    append_lex_leader(clauses, identity, true, next_var);
    while (std::next_permutation(sigma.begin(), sigma.end())) {
        const auto vertex_map = diagonal_vertex_map(n, c, sigma);
        append_lex_leader(clauses, vertex_map, false, next_var);
        append_lex_leader(clauses, vertex_map, true, next_var);
    }
    return make_cnf(next_var, std::move(clauses));
}

}  // namespace

BridgeColorability bridge_2colorable(int n, int c) {
    const Cnf plain = encode_bridge_cnf(n, c);
    const Cnf cnf = symmetry_broken_bridge_cnf(n, c);
    const SolveResult result = solve(cnf);
    if (!result.is_sat()) return BridgeColorability{false, {}};

    std::vector<int> coloring(static_cast<std::size_t>(plain.variable_count));
    for (int v = 1; v <= plain.variable_count; ++v) {
        coloring[static_cast<std::size_t>(v - 1)] =
            result.assignment[static_cast<std::size_t>(v)] ? 1 : 2;
    }
    if (has_mono_bridge(coloring, n, c)) {
        throw std::logic_error("bridge_2colorable: certificate failed re-verification");
    }
    return BridgeColorability{true, std::move(coloring)};
}

MinimalBridgeableResult minimal_bridgeable(int c, int n_max) {
    if (c < 2) throw std::invalid_argument("minimal_bridgeable: need c >= 2");
    MinimalBridgeableResult out;
    for (int n = 2; n <= n_max; ++n) {
        std::uint64_t points = 1;
        for (int i = 0; i < n; ++i) points *= static_cast<std::uint64_t>(c);
        if (points > 1024) break;  // partial scan; scanned_to reports how far we got
        if (bridge_2colorable(n, c).colorable) {
            out.n = n;
            out.scanned_to = n;
            return out;
        }
        out.scanned_to = n;
    }
    return out;
}

std::string write_bridge_coloring(const std::vector<int>& coloring, int n, int c) {
    std::uint64_t points = 1;
    for (int i = 0; i < n; ++i) points *= static_cast<std::uint64_t>(c);
    if (coloring.size() != points) {
        throw std::invalid_argument("write_bridge_coloring: coloring is not total");
    }
    std::string out = "bridgecoloring " + std::to_string(n) + " " + std::to_string(c) + "\n";
    for (std::uint64_t i = 0; i < points; ++i) {
        const ColorVector v = color_vector_at(i, n, c);
        for (int coord : v.coords) {
            out += std::to_string(coord);
            out += ' ';
        }
        out += std::to_string(coloring[i]);
        out += '\n';
    }
    return out;
}

std::vector<int> read_bridge_coloring(std::string_view text, int& n_out, int& c_out) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::size_t end = eol == std::string_view::npos ? text.size() : eol;
        lines.emplace_back(text.substr(pos, end - pos));
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
    }
    if (lines.empty()) throw std::invalid_argument("bridge coloring: empty file");

    int n = 0, c = 0;
    {
        std::string token;
        std::vector<std::string> parts;
        for (char ch : lines[0]) {
            if (ch == ' ') {
                if (!token.empty()) parts.push_back(std::move(token));
                token.clear();
            } else {
                token += ch;
            }
        }
        if (!token.empty()) parts.push_back(std::move(token));
        if (parts.size() != 3 || parts[0] != "bridgecoloring") {
            throw std::invalid_argument("bridge coloring: bad header");
        }
        n = std::stoi(parts[1]);
        c = std::stoi(parts[2]);
    }
    if (n < 1 || c < 2) throw std::invalid_argument("bridge coloring: bad dimensions");
    std::uint64_t points = 1;
    for (int i = 0; i < n; ++i) points *= static_cast<std::uint64_t>(c);
    if (lines.size() != points + 1) {
        throw std::invalid_argument("bridge coloring: wrong number of lines");
    }

    std::vector<int> coloring(points, 0);
    for (std::uint64_t i = 0; i < points; ++i) {
        const std::string& line = lines[i + 1];
        std::vector<int> numbers;
        std::size_t at = 0;
        while (at < line.size()) {
            while (at < line.size() && line[at] == ' ') ++at;
            std::size_t start = at;
            while (at < line.size() && line[at] != ' ') ++at;
            if (at > start) {
                int value = 0;
                const auto* first = line.data() + start;
                const auto* last = line.data() + at;
                const auto [ptr, ec] = std::from_chars(first, last, value);
                if (ec != std::errc{} || ptr != last) {
                    throw std::invalid_argument("bridge coloring: bad number on line " +
                                                std::to_string(i + 2));
                }
                numbers.push_back(value);
            }
        }
        if (numbers.size() != static_cast<std::size_t>(n) + 1) {
            throw std::invalid_argument("bridge coloring: wrong arity on line " +
                                        std::to_string(i + 2));
        }
        ColorVector v;
        v.coords.assign(numbers.begin(), numbers.end() - 1);
        if (color_vector_index(v, c) != i) {
            throw std::invalid_argument("bridge coloring: vectors out of order on line " +
                                        std::to_string(i + 2));
        }
        const int color = numbers.back();
        if (color != 1 && color != 2) {
            throw std::invalid_argument("bridge coloring: color must be 1 or 2 on line " +
                                        std::to_string(i + 2));
        }
        coloring[i] = color;
    }
    n_out = n;
    c_out = c;
    return coloring;
}

}  // namespace ramseyforge
