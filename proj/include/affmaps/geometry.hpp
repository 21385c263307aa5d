#ifndef AFFMAPS_GEOMETRY_HPP
#define AFFMAPS_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "affmaps/binomial.hpp"
#include "affmaps/enumerate.hpp"
#include "affmaps/linalg.hpp"
#include "affmaps/poly.hpp"

namespace affmaps {

struct LatticePolytopePoints {
  std::size_t dimension = 0;
  std::vector<std::vector<Integer>> points;
};

/// {v : <e, v> = 0 for e in equalities, <a, v> >= 0 for a in inequalities}.
struct PolyhedralCone {
  std::size_t dimension = 0;
  std::vector<std::vector<Integer>> equalities;
  std::vector<std::vector<Integer>> inequalities;
};

struct EdgeWithCone {
  ExponentVector first;
  ExponentVector second;
  /// Inner normals v minimize <., v> over the support exactly on the edge.
  PolyhedralCone cone;
  /// A vector in the relative interior of the cone.
  std::vector<Rational> normal;
};

/// One entry per variable; nullopt stands for +infinity.
using WeightVector = std::vector<std::optional<Rational>>;

struct CandidateTuple {
  /// Per variable: 0 zero, +1 free, -1 nonzero link variable.
  std::vector<int> s;
  /// Per equation: the chosen edge of a skipped equation, nothing otherwise.
  std::vector<std::optional<EdgeWithCone>> e;
  ZeroSelection selection;
  /// Interior vector of the common normal cone (all zeros when nothing is skipped).
  std::vector<Rational> pretropism;
};

/// D! times the Euclidean volume of the convex hull; 0 when it is flat.
Integer normalized_volume(const LatticePolytopePoints& p);

/// Normalized volume of the origin, unit vectors for the free variables and
/// the link exponent rows, divided by the index of the link row lattice.
/// Throws std::logic_error if the division is not exact.
Integer degree_of_map(const AffineMonomialMap& c);

/// The 1-faces of the convex hull. Throws std::invalid_argument when all points coincide.
std::vector<EdgeWithCone> newton_edges(const std::set<ExponentVector>& support);

/// Terms minimizing <a, w>; terms touching an infinite weight drop out.
Polynomial initial_form(const Polynomial& p, const WeightVector& w);

/// A vector satisfying every inequality strictly and every equality, if any.
/// Throws std::invalid_argument on a dimension mismatch.
std::optional<std::vector<Rational>> cone_intersection(const std::vector<PolyhedralCone>& cones);

/// Compares in_v(f(z)) with (in_w f)(z) for every equation, where w carries v
/// on the variables outside sel and infinity on sel. v has one entry per
/// variable outside sel, in index order. Throws std::invalid_argument on a
/// malformed selection or weight.
bool check_specialization_commutes(const System& s, const ZeroSelection& sel, const std::vector<Rational>& v);

/// Candidate zero sets refined by edges of the skipped equations whose
/// normal cones share an interior point.
std::vector<CandidateTuple> enumerate_tuples(const System& s, const EnumerationOptions& opts);

}  // namespace affmaps

#endif  // AFFMAPS_GEOMETRY_HPP
