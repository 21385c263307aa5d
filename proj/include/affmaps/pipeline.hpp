#ifndef AFFMAPS_PIPELINE_HPP
#define AFFMAPS_PIPELINE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "affmaps/binomial.hpp"
#include "affmaps/enumerate.hpp"
#include "affmaps/geometry.hpp"
#include "affmaps/poly.hpp"

namespace affmaps {

struct ReportComponent {
  AffineMonomialMap map;
  std::size_t dimension = 0;
  Integer degree;  // 0 when degrees were not requested
  std::vector<std::size_t> zero;
  std::vector<std::size_t> free;
  std::vector<std::size_t> skipped;
};

struct PhaseTimes {
  double enumerate = 0;
  double assemble = 0;
  double prune = 0;
  double degree = 0;
  double total = 0;
};

struct DecompositionReport {
  System system;
  /// False for general systems: components then only cover selections whose
  /// skipped equations reduce to binomials, and tuples carry the rest.
  bool binomial = true;
  std::size_t candidates = 0;
  std::vector<ReportComponent> components;
  std::vector<CandidateTuple> tuples;
  std::map<std::size_t, Integer> degree_by_dimension;
  Integer total_degree;
  PhaseTimes timing;
};

struct DecomposeOptions {
  EnumerationOptions enumeration;
  bool degrees = true;
};

/// Adjacent 2x2 minors of an m-by-n matrix of variables x<i>_<j> (1-based).
/// Throws std::invalid_argument when m or n is below 2.
System gen_adjacent_minors(std::size_t m, std::size_t n);

DecompositionReport decompose(const System& s, const DecomposeOptions& opts = {});

std::string to_json(const DecompositionReport& r, bool with_timing = true, int indent = 2);
std::string to_text(const DecompositionReport& r);

struct ScalingRow {
  std::size_t n = 0;
  std::size_t components = 0;
  double seconds = 0;
};

/// Pure-dimension decomposition of the 2-by-n minors for n = 3..n_max.
/// Each time is the mean over repeated runs lasting at least min_seconds.
std::vector<ScalingRow> bench_scaling(std::size_t n_max, unsigned threads = 1, double min_seconds = 0.2);

}  // namespace affmaps

#endif  // AFFMAPS_PIPELINE_HPP
