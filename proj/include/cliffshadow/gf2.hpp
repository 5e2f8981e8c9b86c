#pragma once

#include <optional>
#include <vector>

#include "cliffshadow/bitvec.hpp"

namespace cliffshadow {

/// Basis of the nullspace {u : row . u = 0 for all rows} over GF(2).
std::vector<BitVec> gf2_nullspace(const std::vector<BitVec>& rows, std::size_t cols);

/// One particular solution of row_i . u = rhs_i, or nullopt if inconsistent.
std::optional<BitVec> gf2_solve(const std::vector<BitVec>& rows, const BitVec& rhs, std::size_t cols);

std::size_t gf2_rank(const std::vector<BitVec>& rows, std::size_t cols);

}  // namespace cliffshadow
