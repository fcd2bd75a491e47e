#pragma once

#include <vector>

#include "qsdd/numbers.hpp"

namespace qsdd {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
long bareiss_rank(std::vector<std::vector<Int>> M);

/// Whether target lies in the rational span of the rows of basis
/// (coordinates over any common monomial indexing; exact).
bool in_row_span(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& target);

} // namespace qsdd
