#ifndef AFFMAPS_ENUMERATE_HPP
#define AFFMAPS_ENUMERATE_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "affmaps/binomial.hpp"
#include "affmaps/poly.hpp"

namespace affmaps {

struct IncidenceRow {
  std::size_t equation = 0;
  ExponentVector exponent;
  std::vector<bool> mask;
};

/// Monomial/variable incidence: mask bit k set iff x_k occurs with positive
/// power. Monomials of one equation with the same 0/1 pattern share a row
/// (x1*x4 and x1^2*x4^2 vanish together); the row keeps the lower-degree one.
struct IncidenceMatrix {
  std::size_t variables = 0;
  std::size_t equations = 0;
  std::vector<IncidenceRow> rows;
  std::set<std::size_t> dropped_variables;
  /// For binomial systems: rows (2i, 2i+1) hold the two monomials of equation i.
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> monomial_pairing;

  std::vector<std::size_t> column_sums() const;
};

struct ZeroSelection {
  std::vector<std::size_t> variables;  // sorted
  std::vector<std::size_t> skipped;    // sorted
  friend bool operator==(const ZeroSelection&, const ZeroSelection&) = default;
  friend auto operator<=>(const ZeroSelection&, const ZeroSelection&) = default;
};

struct EnumerationOptions {
  std::optional<std::size_t> max_codim;
  bool pure_dimension = false;
  bool greedy = false;
  /// Worker threads; 0 or 1 runs on the calling thread.
  unsigned threads = 1;
  /// When false, selections come back in discovery order (single threaded).
  bool sort_output = true;
};

IncidenceMatrix incidence_matrix(const System& s);

/// Inclusion-minimal variable sets whose vanishing kills every row.
std::vector<ZeroSelection> enumerate_zero_sets(const IncidenceMatrix& m, const EnumerationOptions& opts);

/// Zero sets together with skipped equations. Each equation is either
/// annihilated by the selection or skipped; a skipped equation keeps at least
/// two monomials. For binomial systems a skipped equation must be untouched
/// and its variables are never selected afterwards.
std::vector<ZeroSelection> enumerate_candidates(const System& s, const EnumerationOptions& opts);

/// Selected variables become zero, variables absent from the skipped
/// equations become free and the rest are solved as a toric system.
/// Throws std::invalid_argument when a skipped equation is not binomial
/// after removing its monomial content.
std::vector<AffineMonomialMap> assemble_component(const ZeroSelection& sel, const System& s);

/// Sort by size, then lexicographically; drop duplicates.
void canonicalize(std::vector<ZeroSelection>& sels);

}  // namespace affmaps

#endif  // AFFMAPS_ENUMERATE_HPP
