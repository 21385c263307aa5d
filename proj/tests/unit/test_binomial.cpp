#include <random>

#include "affmaps/binomial.hpp"
#include "doctest.h"

using namespace affmaps;

namespace {

// Each binomial term maps to coefficient * t^e; the binomial vanishes on the
// map iff both images carry the same monomial and cancel.
bool binomial_vanishes(const Polynomial& p, const AffineMonomialMap& map) {
  struct Image {
    bool zero = false;
    RadicalNumber value;
    std::vector<Integer> exponent;
  };
  std::vector<Image> images;
  for (const auto& term : p.terms()) {
    Image im;
    im.value = RadicalNumber::from_gaussian(term.coefficient);
    im.exponent.assign(map.dimension(), 0);
    for (std::size_t k = 0; k < term.exponent.size(); ++k) {
      long e = term.exponent[k];
      if (e == 0) continue;
      const auto& v = map.variables[k];
      if (v.kind == VariableKind::Zero) im.zero = true;
      else if (v.kind == VariableKind::Free) im.exponent[v.parameter] += e;
      else {
        im.value *= v.coefficient.pow(e);
        for (std::size_t j = 0; j < map.d; ++j) im.exponent[j] += e * v.exponents[j];
      }
    }
    images.push_back(im);
  }
  if (images[0].zero && images[1].zero) return true;
  if (images[0].zero || images[1].zero) return false;
  return images[0].exponent == images[1].exponent &&
         images[0].value == images[1].value * RadicalNumber::from_gaussian(GaussianRational(-1));
}

}  // namespace

TEST_CASE("normalize binomial systems") {
  auto s = parse_system("x1 x2 x3 x4; x1^80 - x2^21*x3^2; x1^54 - x2^15*x4^2;");
  auto nbs = normalize_binomial(s);
  CHECK(nbs.A == IntegerMatrix{{80, -21, -2, 0}, {54, -15, 0, -2}});
  CHECK(nbs.c == std::vector<GaussianRational>{1, 1});
  auto t = normalize_binomial(parse_system("x1 x2; x1 - 2*x2;"));
  CHECK(t.A == IntegerMatrix{{1, -1}});
  CHECK(t.c == std::vector<GaussianRational>{2});
  auto u = normalize_binomial(parse_system("x11 x12 x21 x22; x11*x22 - x21*x12;"));
  CHECK(u.A == IntegerMatrix{{1, -1, -1, 1}});
  CHECK(u.c == std::vector<GaussianRational>{1});
  CHECK_THROWS_AS(normalize_binomial(parse_system("x y; x*y;")), std::invalid_argument);
  CHECK_THROWS_AS(normalize_binomial(parse_system("x y; x + y + 1;")), std::invalid_argument);
}

TEST_CASE("toric solve of the fractional-power example") {
  auto s = parse_system("x1 x2 x3 x4; x1^80 - x2^21*x3^2; x1^54 - x2^15*x4^2;");
  auto sols = toric_solve(normalize_binomial(s), 4);
  // the two sign choices are paired: Z^4 / rowspace(A) has torsion of order 2
  REQUIRE(sols.maps.size() == 2);
  for (const auto& m : sols.maps) {
    CHECK(m.d == 2);
    CHECK(m.dimension() == 2);
    for (const auto& p : s.polynomials) CHECK(binomial_vanishes(p, m));
  }
  CHECK(sols.maps[0].link_matrix() == sols.maps[1].link_matrix());
  CHECK(sols.maps[0] != sols.maps[1]);
  // the printed exponents lie in the kernel lattice spanned by the link columns
  IntegerMatrix K = sols.maps[0].link_matrix();
  IntegerMatrix both(4, 4);
  IntegerMatrix printed{{5, 21}, {18, 80}, {11, 0}, {0, -33}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 2; ++j) both(i, j) = K(i, j);
    for (std::size_t j = 0; j < 2; ++j) both(i, 2 + j) = printed(i, j);
  }
  CHECK(rank(both) == 2);
}

TEST_CASE("toric solve trivial and minors") {
  auto s = parse_system("x1 x2; x1 - x2;");
  auto sols = toric_solve(normalize_binomial(s), 2);
  REQUIRE(sols.maps.size() == 1);
  CHECK(sols.maps[0].to_string(s.variables) == "x1 = t1, x2 = t1");

  auto m = parse_system(
      "x11 x12 x13 x14 x21 x22 x23 x24;"
      "x11*x22 - x21*x12; x12*x23 - x22*x13; x13*x24 - x23*x14;");
  auto ms = toric_solve(normalize_binomial(m), 8);
  REQUIRE(ms.maps.size() == 1);
  CHECK(ms.maps[0].dimension() == 5);
  for (const auto& p : m.polynomials) CHECK(binomial_vanishes(p, ms.maps[0]));
  // the printed parametrization spans the same exponent lattice
  IntegerMatrix printed{{1, 0, 0, 1, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1},
                        {1, 0, 0, 0, 0}, {0, 1, 0, -1, -1}, {0, 0, 1, -1, -1}, {0, 0, 0, -1, 0}};
  CHECK(canonical_lattice_basis(printed.transpose()) ==
        canonical_lattice_basis(ms.maps[0].link_matrix().transpose()));
}

TEST_CASE("toric solve free variables and inconsistency") {
  auto s = parse_system("x y z; x^2 - 4; x*z - 2*z;");
  // second equation normalizes to x = 2
  auto sols = toric_solve(normalize_binomial(s), 3);
  REQUIRE(sols.maps.size() == 1);
  CHECK(sols.maps[0].to_string(s.variables) == "x = 2, y = t1 (free), z = t2 (free)");
  auto bad = parse_system("x; x - 1; x - 2;");
  CHECK(toric_solve(normalize_binomial(bad), 1).maps.empty());
  auto roots = parse_system("x y; x^3 - 2; y^2 + 1;");
  auto rs = toric_solve(normalize_binomial(roots), 2);
  CHECK(rs.maps.size() == 6);
  for (const auto& mp : rs.maps)
    for (const auto& p : roots.polynomials) CHECK(binomial_vanishes(p, mp));
}

TEST_CASE("toric solve property: substitution, dimension, count") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> e(0, 3), cf(-3, 3), nv(2, 4), ne(1, 3);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = nv(rng), m = ne(rng);
    System s;
    for (std::size_t k = 0; k < n; ++k) s.variables.push_back("x" + std::to_string(k));
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Term> terms(2);
      for (auto& t : terms) {
        t.exponent.resize(n);
        for (auto& x : t.exponent) x = e(rng);
        int c = cf(rng);
        t.coefficient = GaussianRational(c == 0 ? 1 : c, cf(rng) > 1 ? 1 : 0);
      }
      Polynomial p(terms);
      if (p.size() == 2) s.polynomials.push_back(p);
    }
    if (s.polynomials.empty()) continue;
    auto nbs = normalize_binomial(s);
    auto sols = toric_solve(nbs, n);
    std::size_t d = n - rank(nbs.A);
    Integer torsion = 1;
    for (const auto& x : smith_normal_form(nbs.A).diagonal)
      if (x != 0) torsion *= x;
    if (!sols.maps.empty()) CHECK(Integer(sols.maps.size()) == torsion);
    for (const auto& mp : sols.maps) {
      CHECK(mp.dimension() == d);
      for (const auto& p : s.polynomials) CHECK(binomial_vanishes(p, mp));
      ++checked;
    }
    for (std::size_t a = 0; a < sols.maps.size(); ++a)
      for (std::size_t b = a + 1; b < sols.maps.size(); ++b) CHECK(sols.maps[a] != sols.maps[b]);
  }
  CHECK(checked > 200);
}
