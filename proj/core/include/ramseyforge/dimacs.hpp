#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ramseyforge/cnf.hpp"

namespace ramseyforge {

class DimacsParseError : public std::runtime_error {
public:
    DimacsParseError(int line, const std::string& what)
        : std::runtime_error("dimacs:" + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// "p cnf V C" header, one clause per line, literals space-separated, each
// line terminated by " 0". Deterministic byte-for-byte on canonical CNFs.
std::string write_dimacs(const Cnf& cnf);

// Accepts the format above plus leading/interleaved "c" comment lines.
// Throws DimacsParseError with the offending line number.
Cnf read_dimacs(std::string_view text);

}  // namespace ramseyforge
