#pragma once

#include <cstddef>
#include <vector>

namespace sizefn {

/// Rank over the rationals of an integer matrix, by fraction-free Gaussian
/// elimination (Bareiss). Intermediate entries are minors of the input, so
/// for the incidence-like {-1,0,1} matrices used here they never grow.
std::size_t integer_matrix_rank(std::vector<std::vector<long long>> m);

}  // namespace sizefn
