#include "cliffshadow/gf2.hpp"

#include <stdexcept>

namespace cliffshadow {

namespace {

struct Reduced {
  std::vector<BitVec> rows;   // row-reduced, zero rows dropped
  std::vector<bool> rhs;      // reduced right-hand side (parallel to rows)
  std::vector<std::size_t> pivot_col;
  bool consistent;
};

Reduced reduce(std::vector<BitVec> rows, std::vector<bool> rhs, std::size_t cols) {
  Reduced out;
  out.consistent = true;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i].get(c)) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    std::swap(rhs[r], rhs[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) {
        rows[i].xor_with(rows[r]);
        rhs[i] = rhs[i] ^ rhs[r];
      }
    }
    out.pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rhs[i]) out.consistent = false;
  }
  rows.resize(r);
  rhs.resize(r);
  out.rows = std::move(rows);
  out.rhs = std::move(rhs);
  return out;
}

}  // namespace

std::vector<BitVec> gf2_nullspace(const std::vector<BitVec>& rows, std::size_t cols) {
  Reduced red = reduce(rows, std::vector<bool>(rows.size(), false), cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : red.pivot_col) is_pivot[c] = true;

  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BitVec u(cols);
    u.set(f, true);
    for (std::size_t i = 0; i < red.rows.size(); ++i) {
      // pivot var = sum of free vars present in that row
      if (red.rows[i].get(f)) u.set(red.pivot_col[i], true);
    }
    basis.push_back(std::move(u));
  }
  return basis;
}

std::optional<BitVec> gf2_solve(const std::vector<BitVec>& rows, const BitVec& rhs, std::size_t cols) {
  if (rhs.size() != rows.size()) throw std::invalid_argument("gf2_solve: rhs length mismatch");
  std::vector<bool> b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) b[i] = rhs.get(i);
  Reduced red = reduce(rows, std::move(b), cols);
  if (!red.consistent) return std::nullopt;
  BitVec u(cols);
  for (std::size_t i = 0; i < red.rows.size(); ++i) {
    if (red.rhs[i]) u.set(red.pivot_col[i], true);
  }
  return u;
}

std::size_t gf2_rank(const std::vector<BitVec>& rows, std::size_t cols) {
  Reduced red = reduce(rows, std::vector<bool>(rows.size(), false), cols);
  return red.rows.size();
}

}  // namespace cliffshadow
