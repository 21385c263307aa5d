#include <random>

#include "affmaps/number.hpp"
#include "doctest.h"

using namespace affmaps;

TEST_CASE("factor_integer") {
  auto f = factor_integer(Integer(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(Integer(2), 3u));
  CHECK(f[1] == std::make_pair(Integer(3), 2u));
  CHECK(f[2] == std::make_pair(Integer(5), 1u));
  Integer big = Integer("1000000007") * Integer("998244353");
  auto g = factor_integer(big);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == Integer("998244353"));
}

TEST_CASE("gaussian rational text") {
  CHECK(GaussianRational(3).to_string() == "3");
  CHECK(GaussianRational(Rational(-7, 2)).to_string() == "-7/2");
  CHECK(GaussianRational(0, 2).to_string() == "2*i");
  CHECK(GaussianRational(Rational(1, 2), -3).to_string() == "1/2-3*i");
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST_CASE("radical numbers round trip gaussian rationals") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int trial = 0; trial < 300; ++trial) {
    GaussianRational a(Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 1 + std::abs(d(rng))));
    GaussianRational b(Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 1 + std::abs(d(rng))));
    a.re.canonicalize();
    a.im.canonicalize();
    b.re.canonicalize();
    b.im.canonicalize();
    if (a.is_zero() || b.is_zero()) continue;
    auto ra = RadicalNumber::from_gaussian(a);
    auto rb = RadicalNumber::from_gaussian(b);
    auto back = ra.to_gaussian();
    REQUIRE(back.has_value());
    CHECK(*back == a);
    CHECK((ra * rb).to_gaussian().value() == a * b);
    CHECK((ra / rb).to_gaussian().value() == a / b);
    auto z = ra.to_complex();
    CHECK(std::abs(z - a.to_complex()) < 1e-9 * (1 + std::abs(z)));
  }
}

TEST_CASE("radical roots") {
  auto r = RadicalNumber::from_gaussian(GaussianRational(-4));
  auto roots = r.roots(2);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].to_gaussian().value() == GaussianRational(0, 2));
  CHECK(roots[1].to_gaussian().value() == GaussianRational(0, -2));
  auto two = RadicalNumber::from_gaussian(GaussianRational(2));
  auto cube = two.roots(3);
  for (const auto& c : cube) CHECK(c.pow(3) == two);
  CHECK(cube[0].to_string() == "(2)^(1/3)");
  auto w = RadicalNumber::from_gaussian(GaussianRational(3, 4));
  for (unsigned k : {2u, 3u, 5u}) {
    auto rs = w.roots(k);
    CHECK(rs.size() == k);
    for (const auto& x : rs) {
      CHECK(x.pow(k) == w);
      CHECK(std::abs(std::pow(x.to_complex(), double(k)) - w.to_complex()) < 1e-9);
    }
  }
  CHECK(RadicalNumber::from_gaussian(GaussianRational(5)).roots(2)[0].to_string() == "(5)^(1/2)");
  CHECK(RadicalNumber::from_gaussian(GaussianRational(-5)).roots(2)[0].to_string() == "i*(5)^(1/2)");
}

TEST_CASE("coset key") {
  auto s2 = RadicalNumber::from_gaussian(GaussianRational(2)).roots(2)[0];
  auto s8 = RadicalNumber::from_gaussian(GaussianRational(8)).roots(2)[0];
  auto s3 = RadicalNumber::from_gaussian(GaussianRational(3)).roots(2)[0];
  CHECK(s2.coset_key() == s8.coset_key());
  CHECK(s2.coset_key() != s3.coset_key());
  CHECK(RadicalNumber::from_gaussian(GaussianRational(7, 3)).coset_key().is_one());
}
