#include "affmaps/lp.hpp"

#include <stdexcept>

namespace affmaps {

std::optional<std::vector<Rational>> find_feasible_point(std::size_t n,
                                                         const std::vector<LinearConstraint>& constraints) {
  const std::size_t m = constraints.size();
  if (m == 0) return std::vector<Rational>(n);
  // columns: x+ (n), x- (n), one slack per inequality, one artificial per row
  std::size_t slacks = 0;
  for (const auto& c : constraints) {
    if (c.coefficients.size() != n) throw std::invalid_argument("find_feasible_point: width mismatch");
    if (c.kind != LinearConstraint::Kind::Equal) ++slacks;
  }
  const std::size_t art0 = 2 * n + slacks;
  const std::size_t cols = art0 + m;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  std::size_t s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    auto& row = T[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = c.coefficients[j];
      row[n + j] = -c.coefficients[j];
    }
    if (c.kind == LinearConstraint::Kind::GreaterEqual) row[2 * n + s++] = -1;
    else if (c.kind == LinearConstraint::Kind::LessEqual) row[2 * n + s++] = 1;
    row[cols] = c.rhs;
    if (row[cols] < 0)
      for (auto& v : row) v = -v;
    row[art0 + i] = 1;
    basis[i] = art0 + i;
  }
  // reduced costs of the phase-one objective (sum of artificials)
  std::vector<Rational> cost(cols + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < art0 || j == cols) cost[j] -= T[i][j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][cols] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen for a bounded phase-one objective
    Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (T[leave][j] != 0) cost[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] += T[i][cols];
    else if (basis[i] < 2 * n) x[basis[i] - n] -= T[i][cols];
  }
  return x;
}

}  // namespace affmaps
