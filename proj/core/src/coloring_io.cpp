#include "coloring_io.hpp"

#include <charconv>
#include <stdexcept>

#include "ramseyforge/kset.hpp"

namespace ramseyforge {

std::string write_two_coloring_file(std::string_view header, int N, int k,
                                    const std::vector<int>& colors) {
    if (colors.size() != n_choose_k(N, k)) {
        throw std::invalid_argument(std::string(header) + ": coloring is not total");
    }
    std::string out;
    out += header;
    out += ' ';
    out += std::to_string(N);
    out += ' ';
    out += std::to_string(k);
    out += '\n';
    std::uint64_t r = 0;
    for (const KSet& x : ksubsets(N, k)) {
        for (int i = 1; i <= k; ++i) {
            out += std::to_string(x.element(i));
            out += ' ';
        }
        const int color = colors[r++];
        if (color != 1 && color != 2) {
            throw std::invalid_argument(std::string(header) + ": colors must be 1 or 2");
        }
        out += std::to_string(color);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<int> parse_numbers(std::string_view line, std::size_t line_no,
                               std::string_view header) {
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
                throw std::invalid_argument(std::string(header) + ": bad number on line " +
                                            std::to_string(line_no));
            }
            numbers.push_back(value);
        }
    }
    return numbers;
}

}  // namespace

std::vector<int> read_two_coloring_file(std::string_view header, std::string_view text,
                                        int& n_out, int& k_out) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::size_t end = eol == std::string_view::npos ? text.size() : eol;
        lines.push_back(text.substr(pos, end - pos));
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
    }
    if (lines.empty()) throw std::invalid_argument(std::string(header) + ": empty file");
    const std::string expect_prefix = std::string(header) + " ";
    if (lines[0].substr(0, expect_prefix.size()) != expect_prefix) {
        throw std::invalid_argument(std::string(header) + ": bad header");
    }
    const auto dims = parse_numbers(lines[0].substr(expect_prefix.size()), 1, header);
    if (dims.size() != 2) throw std::invalid_argument(std::string(header) + ": bad header");
    const int N = dims[0];
    const int k = dims[1];
    if (k < 1 || k > N) throw std::invalid_argument(std::string(header) + ": bad dimensions");
    const std::uint64_t expect = n_choose_k(N, k);
    if (lines.size() != expect + 1) {
        throw std::invalid_argument(std::string(header) + ": wrong number of lines");
    }

    std::vector<int> colors(expect, 0);
    for (std::uint64_t r = 0; r < expect; ++r) {
        const auto numbers = parse_numbers(lines[r + 1], r + 2, header);
        if (numbers.size() != static_cast<std::size_t>(k) + 1) {
            throw std::invalid_argument(std::string(header) + ": wrong arity on line " +
                                        std::to_string(r + 2));
        }
        const KSet x(std::vector<int>(numbers.begin(), numbers.end() - 1));
        if (x.max() > N || rank(x, N) != r) {
            throw std::invalid_argument(std::string(header) + ": sets out of order on line " +
                                        std::to_string(r + 2));
        }
        const int color = numbers.back();
        if (color != 1 && color != 2) {
            throw std::invalid_argument(std::string(header) + ": color must be 1 or 2 on line " +
                                        std::to_string(r + 2));
        }
        colors[r] = color;
    }
    n_out = N;
    k_out = k;
    return colors;
}

}  // namespace ramseyforge
