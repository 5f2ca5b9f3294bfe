#pragma once

#include <vector>

#include "homcount/numeric.hpp"

namespace homcount {

// Diagonal of the Smith normal form of an integer matrix: non-negative
// entries d_1 | d_2 | ... | d_r followed by zeros, length min(rows, cols).
// Exact arithmetic throughout; the input matrix is consumed by value.
std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m);

}  // namespace homcount
