#ifndef AFFMAPS_BINOMIAL_HPP
#define AFFMAPS_BINOMIAL_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "affmaps/linalg.hpp"
#include "affmaps/number.hpp"
#include "affmaps/poly.hpp"

namespace affmaps {

struct NormalizedBinomialSystem {
  IntegerMatrix A;
  std::vector<GaussianRational> c;
};

enum class VariableKind { Zero, Free, Link };

struct VariableStatus {
  VariableKind kind = VariableKind::Zero;
  std::size_t parameter = 0;        // Free: index of its parameter (>= d)
  RadicalNumber coefficient;        // Link
  std::vector<Integer> exponents;   // Link: length d
  friend bool operator==(const VariableStatus&, const VariableStatus&) = default;
};

/// x_k = 0, x_k = t_p, or x_k = c_k * t^(v_k) over d link parameters.
/// Parameters 0..d-1 are the link parameters, free variables own d, d+1, ...
struct AffineMonomialMap {
  std::vector<VariableStatus> variables;
  std::size_t d = 0;
  IntegerMatrix W;
  std::set<std::size_t> skipped;

  std::size_t variable_count() const { return variables.size(); }
  std::size_t free_count() const;
  std::size_t dimension() const { return d + free_count(); }
  std::vector<bool> zero_mask() const;
  std::set<std::size_t> zero_set() const;
  std::set<std::size_t> free_set() const;
  std::vector<std::size_t> link_variables() const;
  /// Rows of the link exponent matrix, one per link variable.
  IntegerMatrix link_matrix() const;

  /// Human readable form, e.g. "x = t1*t2^-1, y = 0, z = t3 (free)".
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const AffineMonomialMap&, const AffineMonomialMap&) = default;
};

struct ToricSolutionSet {
  std::vector<AffineMonomialMap> maps;
};

/// Throws std::invalid_argument unless every polynomial has exactly two terms.
NormalizedBinomialSystem normalize_binomial(const System& s);

/// All toric components of x^A = c (possibly none).
ToricSolutionSet toric_solve(const NormalizedBinomialSystem& nbs, std::size_t n);

}  // namespace affmaps

#endif  // AFFMAPS_BINOMIAL_HPP
