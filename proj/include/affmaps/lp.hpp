#ifndef AFFMAPS_LP_HPP
#define AFFMAPS_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "affmaps/number.hpp"

namespace affmaps {

struct LinearConstraint {
  enum class Kind { Equal, GreaterEqual, LessEqual };
  std::vector<Rational> coefficients;
  Kind kind = Kind::Equal;
  Rational rhs;
};

/// A point satisfying all constraints over free (unrestricted) variables, or
/// nothing when the system is infeasible. Exact simplex with Bland's rule.
std::optional<std::vector<Rational>> find_feasible_point(std::size_t variables,
                                                         const std::vector<LinearConstraint>& constraints);

}  // namespace affmaps

#endif  // AFFMAPS_LP_HPP
