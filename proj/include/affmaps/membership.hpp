#ifndef AFFMAPS_MEMBERSHIP_HPP
#define AFFMAPS_MEMBERSHIP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "affmaps/binomial.hpp"
#include "affmaps/linalg.hpp"
#include "affmaps/poly.hpp"

namespace affmaps {

/// Minimal-support integer dependency among rows; first nonzero entry positive.
struct Circuit {
  std::vector<Integer> coefficients;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// x^plus - gamma * x^minus.
struct BinomialGenerator {
  ExponentVector plus;
  ExponentVector minus;
  RadicalNumber gamma;

  /// The generator as a polynomial when gamma is a Gaussian rational.
  std::optional<Polynomial> to_polynomial() const;
  std::string to_string(const std::vector<std::string>& names) const;
};

struct DefiningEquations {
  std::vector<std::size_t> monomial_generators;  // zero variables
  std::vector<BinomialGenerator> binomial_generators;
};

/// All circuits among the rows of V, ordered by support size then lexicographically.
std::vector<Circuit> circuits(const IntegerMatrix& V);

DefiningEquations defining_equations(const AffineMonomialMap& c);

/// Whether substituting the map into g gives the zero Laurent polynomial.
bool vanishes_on(const Polynomial& g, const AffineMonomialMap& c);
bool vanishes_on(const BinomialGenerator& g, const AffineMonomialMap& c);

/// Whether inner lies in the closure of outer.
bool contains(const AffineMonomialMap& outer, const AffineMonomialMap& inner);

/// Same zero and free variables, same link exponent space, same coefficient orbit.
bool equivalent(const AffineMonomialMap& a, const AffineMonomialMap& b);

/// One representative per equivalence class that no other map contains,
/// in canonical order (dimension descending, then zero set, then free set).
std::vector<AffineMonomialMap> prune_components(std::vector<AffineMonomialMap> maps, unsigned threads = 1);

/// Canonical ordering used by prune_components.
bool canonical_less(const AffineMonomialMap& a, const AffineMonomialMap& b);

}  // namespace affmaps

#endif  // AFFMAPS_MEMBERSHIP_HPP
