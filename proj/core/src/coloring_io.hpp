#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ramseyforge {

// Shared shape of the ramseycoloring / pathcoloring files: a header token
// with N and k, then one "x1 ... xk color" line per k-set in lexicographic
// order with color in {1,2}.
std::string write_two_coloring_file(std::string_view header, int N, int k,
                                    const std::vector<int>& colors);
std::vector<int> read_two_coloring_file(std::string_view header, std::string_view text,
                                        int& n_out, int& k_out);

}  // namespace ramseyforge
