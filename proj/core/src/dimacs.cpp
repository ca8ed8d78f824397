#include "ramseyforge/dimacs.hpp"

#include <charconv>
#include <cstdlib>
#include <vector>

namespace ramseyforge {

std::string write_dimacs(const Cnf& cnf) {
    std::string out = "p cnf " + std::to_string(cnf.variable_count) + " " +
                      std::to_string(cnf.clauses.size()) + "\n";
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) {
            out += std::to_string(lit);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

int parse_int(std::string_view token, int line_no, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw DimacsParseError(line_no, std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Cnf read_dimacs(std::string_view text) {
    int line_no = 0;
    bool have_header = false;
    int variable_count = 0;
    std::size_t clause_count = 0;
    std::vector<std::vector<int>> clauses;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (have_header) throw DimacsParseError(line_no, "duplicate header");
            if (tokens.size() != 4 || tokens[1] != "cnf") {
                throw DimacsParseError(line_no, "expected 'p cnf V C'");
            }
            variable_count = parse_int(tokens[2], line_no, "variable count");
            const int c = parse_int(tokens[3], line_no, "clause count");
            if (variable_count < 0 || c < 0) {
                throw DimacsParseError(line_no, "negative header counts");
            }
            clause_count = static_cast<std::size_t>(c);
            have_header = true;
            continue;
        }
        if (!have_header) throw DimacsParseError(line_no, "clause before header");
        std::vector<int> clause;
        bool terminated = false;
        for (const auto token : tokens) {
            const int lit = parse_int(token, line_no, "literal");
            if (terminated) throw DimacsParseError(line_no, "literal after terminating 0");
            if (lit == 0) {
                terminated = true;
                continue;
            }
            if (std::abs(lit) > variable_count) {
                throw DimacsParseError(line_no, "literal outside declared variable range");
            }
            clause.push_back(lit);
        }
        if (!terminated) throw DimacsParseError(line_no, "clause not terminated by 0");
        clauses.push_back(std::move(clause));
    }
    if (!have_header) throw DimacsParseError(line_no, "missing header");
    if (clauses.size() != clause_count) {
        throw DimacsParseError(line_no, "clause count mismatch with header");
    }
    return make_cnf(variable_count, std::move(clauses));
}

}  // namespace ramseyforge
