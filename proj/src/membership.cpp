#include "affmaps/membership.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

#include "affmaps/lp.hpp"

namespace affmaps {

namespace {

// Integer relations among the given rows of the link matrix, as kernel columns.
IntegerMatrix relation_lattice(const IntegerMatrix& rows) {
  if (rows.cols() == 0) return IntegerMatrix::identity(rows.rows());
  return integer_kernel(rows.transpose());
}

IntegerMatrix select_rows(const IntegerMatrix& m, const std::vector<std::size_t>& idx) {
  IntegerMatrix out(idx.size(), m.cols());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(idx[r], c);
  return out;
}

// Advance a sorted k-subset of {0..n-1}; false when exhausted.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Sum of key_j * z_j at 512 bits, compared against the magnitude of the terms.
bool numerically_zero(const std::vector<std::pair<RadicalNumber, GaussianRational>>& terms) {
  constexpr mpfr_prec_t prec = 512;
  mpfr_t re, im, mag, lm, ang, t, u, pi;
  for (mpfr_ptr p : {re, im, mag, lm, ang, t, u, pi}) mpfr_init2(p, prec);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  mpfr_set_zero(mag, 1);
  mpfr_const_pi(pi, MPFR_RNDN);
  for (const auto& [key, z] : terms) {
    mpfr_set_zero(lm, 1);
    mpfr_set_q(ang, key.phase().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(ang, ang, pi, MPFR_RNDN);
    mpfr_mul_ui(ang, ang, 2, MPFR_RNDN);
    for (const auto& [p, q] : key.factors()) {
      mpfr_set_z(t, p.re.get_mpz_t(), MPFR_RNDN);
      mpfr_set_z(u, p.im.get_mpz_t(), MPFR_RNDN);
      mpfr_hypot(t, t, u, MPFR_RNDN);
      mpfr_log(t, t, MPFR_RNDN);
      mpfr_mul_q(t, t, q.get_mpq_t(), MPFR_RNDN);
      mpfr_add(lm, lm, t, MPFR_RNDN);
      mpfr_set_z(t, p.re.get_mpz_t(), MPFR_RNDN);
      mpfr_set_z(u, p.im.get_mpz_t(), MPFR_RNDN);
      mpfr_atan2(t, u, t, MPFR_RNDN);
      mpfr_mul_q(t, t, q.get_mpq_t(), MPFR_RNDN);
      mpfr_add(ang, ang, t, MPFR_RNDN);
    }
    // w = exp(lm) * (cos ang + i sin ang) * (a + b i)
    mpfr_exp(lm, lm, MPFR_RNDN);
    mpfr_t wr, wi, a, b;
    for (mpfr_ptr p : {wr, wi, a, b}) mpfr_init2(p, prec);
    mpfr_sin_cos(wi, wr, ang, MPFR_RNDN);
    mpfr_mul(wr, wr, lm, MPFR_RNDN);
    mpfr_mul(wi, wi, lm, MPFR_RNDN);
    mpfr_set_q(a, z.re.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(b, z.im.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(t, wr, a, MPFR_RNDN);
    mpfr_mul(u, wi, b, MPFR_RNDN);
    mpfr_sub(t, t, u, MPFR_RNDN);
    mpfr_add(re, re, t, MPFR_RNDN);
    mpfr_abs(t, t, MPFR_RNDN);
    mpfr_add(mag, mag, t, MPFR_RNDN);
    mpfr_mul(t, wr, b, MPFR_RNDN);
    mpfr_mul(u, wi, a, MPFR_RNDN);
    mpfr_add(t, t, u, MPFR_RNDN);
    mpfr_add(im, im, t, MPFR_RNDN);
    mpfr_abs(t, t, MPFR_RNDN);
    mpfr_add(mag, mag, t, MPFR_RNDN);
    for (mpfr_ptr p : {wr, wi, a, b}) mpfr_clear(p);
  }
  mpfr_hypot(t, re, im, MPFR_RNDN);
  mpfr_mul_2si(mag, mag, -400, MPFR_RNDN);
  const bool zero = mpfr_lessequal_p(t, mag);
  for (mpfr_ptr p : {re, im, mag, lm, ang, t, u, pi}) mpfr_clear(p);
  return zero;
}

// A Laurent term in the parameters: value * t^exponent.
struct ParamTerm {
  GaussianRational scalar;
  RadicalNumber radical;
  std::vector<Integer> exponent;
};

// Substitute the map into scalar * radical * x^e; nothing when a zero variable occurs.
std::optional<ParamTerm> substitute(const GaussianRational& scalar, const RadicalNumber& radical,
                                    const ExponentVector& e, const AffineMonomialMap& c) {
  ParamTerm out{scalar, radical, std::vector<Integer>(c.dimension(), 0)};
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    const auto& v = c.variables[k];
    switch (v.kind) {
      case VariableKind::Zero:
        return std::nullopt;
      case VariableKind::Free:
        out.exponent[v.parameter] += e[k];
        break;
      case VariableKind::Link:
        out.radical *= v.coefficient.pow(Integer(e[k]));
        for (std::size_t j = 0; j < c.d; ++j) out.exponent[j] += v.exponents[j] * e[k];
        break;
    }
  }
  return out;
}

bool laurent_is_zero(const std::vector<ParamTerm>& terms) {
  std::map<std::vector<Integer>, std::vector<const ParamTerm*>> groups;
  for (const auto& t : terms) groups[t.exponent].push_back(&t);
  for (const auto& [exp, group] : groups) {
    std::map<RadicalNumber, GaussianRational> cosets;
    for (const ParamTerm* t : group) {
      RadicalNumber key = t->radical.coset_key();
      auto rest = (t->radical / key).to_gaussian();
      if (!rest) throw std::logic_error("vanishes_on: coset representative is not Gaussian");
      cosets[key] += t->scalar * *rest;
    }
    std::vector<std::pair<RadicalNumber, GaussianRational>> live;
    for (const auto& [key, z] : cosets)
      if (!z.is_zero()) live.emplace_back(key, z);
    if (live.empty()) continue;
    if (live.size() == 1 || !numerically_zero(live)) return false;
  }
  return true;
}

}  // namespace

std::optional<Polynomial> BinomialGenerator::to_polynomial() const {
  auto g = gamma.to_gaussian();
  if (!g) return std::nullopt;
  return Polynomial({Term{GaussianRational(1), plus}, Term{-*g, minus}});
}

std::string BinomialGenerator::to_string(const std::vector<std::string>& names) const {
  auto mono = [&](const ExponentVector& e) {
    std::string out;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!out.empty()) out += "*";
      out += names[k];
      if (e[k] != 1) out += "^" + std::to_string(e[k]);
    }
    return out.empty() ? std::string("1") : out;
  };
  std::string g = gamma.is_one() ? "" : "(" + gamma.to_string() + ")*";
  return mono(plus) + " - " + g + mono(minus);
}

std::vector<Circuit> circuits(const IntegerMatrix& V) {
  const std::size_t n = V.rows();
  const std::size_t top = std::min(n, rank(V) + 1);
  std::vector<Circuit> out;
  for (std::size_t s = 1; s <= top; ++s) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      IntegerMatrix K = relation_lattice(select_rows(V, idx));
      if (K.cols() != 1) continue;
      bool full = true;
      for (std::size_t r = 0; r < s; ++r) full = full && K(r, 0) != 0;
      if (!full) continue;
      Circuit c{std::vector<Integer>(n, 0)};
      for (std::size_t r = 0; r < s; ++r) c.coefficients[idx[r]] = K(r, 0);
      out.push_back(std::move(c));
    } while (next_subset(idx, n));
  }
  return out;
}

DefiningEquations defining_equations(const AffineMonomialMap& c) {
  DefiningEquations out;
  const std::size_t n = c.variable_count();
  for (std::size_t k : c.zero_set()) out.monomial_generators.push_back(k);
  auto links = c.link_variables();
  for (const auto& circ : circuits(c.link_matrix())) {
    BinomialGenerator g{ExponentVector(n, 0), ExponentVector(n, 0), RadicalNumber()};
    for (std::size_t r = 0; r < links.size(); ++r) {
      const Integer& u = circ.coefficients[r];
      if (u == 0) continue;
      const std::size_t k = links[r];
      g.gamma *= c.variables[k].coefficient.pow(u);
      if (u > 0) g.plus[k] = u.get_si();
      else g.minus[k] = Integer(-u).get_si();
    }
    out.binomial_generators.push_back(std::move(g));
  }
  return out;
}

bool vanishes_on(const Polynomial& g, const AffineMonomialMap& c) {
  std::vector<ParamTerm> terms;
  for (const auto& t : g.terms())
    if (auto p = substitute(t.coefficient, RadicalNumber(), t.exponent, c)) terms.push_back(std::move(*p));
  return laurent_is_zero(terms);
}

bool vanishes_on(const BinomialGenerator& g, const AffineMonomialMap& c) {
  std::vector<ParamTerm> terms;
  if (auto p = substitute(GaussianRational(1), RadicalNumber(), g.plus, c)) terms.push_back(std::move(*p));
  if (auto p = substitute(GaussianRational(-1), g.gamma, g.minus, c)) terms.push_back(std::move(*p));
  return laurent_is_zero(terms);
}

bool contains(const AffineMonomialMap& outer, const AffineMonomialMap& inner) {
  const std::size_t n = outer.variable_count();
  if (inner.variable_count() != n) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (outer.variables[k].kind == VariableKind::Zero && inner.variables[k].kind != VariableKind::Zero) return false;

  // Outer link variables split into those alive on inner and those sent to zero.
  const auto links = outer.link_variables();
  const IntegerMatrix V = outer.link_matrix();
  std::vector<std::size_t> alive, dead;
  for (std::size_t r = 0; r < links.size(); ++r)
    (inner.variables[links[r]].kind == VariableKind::Zero ? dead : alive).push_back(r);

  // The vanishing pattern must come from a face: a weight w with <v,w> = 0 on
  // alive rows and > 0 on dead rows.
  if (!dead.empty()) {
    if (outer.d == 0) return false;
    std::vector<LinearConstraint> cons;
    for (std::size_t r : alive) {
      LinearConstraint lc{std::vector<Rational>(outer.d), LinearConstraint::Kind::Equal, Rational(0)};
      for (std::size_t j = 0; j < outer.d; ++j) lc.coefficients[j] = V(r, j);
      cons.push_back(std::move(lc));
    }
    for (std::size_t r : dead) {
      LinearConstraint lc{std::vector<Rational>(outer.d), LinearConstraint::Kind::GreaterEqual, Rational(1)};
      for (std::size_t j = 0; j < outer.d; ++j) lc.coefficients[j] = V(r, j);
      cons.push_back(std::move(lc));
    }
    if (!find_feasible_point(outer.d, cons)) return false;
  }

  // Relations among the alive rows must hold on inner, coefficients included.
  const IntegerMatrix K = relation_lattice(select_rows(V, alive));
  for (std::size_t col = 0; col < K.cols(); ++col) {
    std::vector<Integer> e(inner.d, 0);
    RadicalNumber lhs, rhs;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      const Integer& u = K(i, col);
      if (u == 0) continue;
      const std::size_t k = links[alive[i]];
      const auto& v = inner.variables[k];
      if (v.kind != VariableKind::Link) return false;
      lhs *= v.coefficient.pow(u);
      rhs *= outer.variables[k].coefficient.pow(u);
      for (std::size_t j = 0; j < inner.d; ++j) e[j] += u * v.exponents[j];
    }
    if (lhs != rhs) return false;
    for (const auto& x : e)
      if (x != 0) return false;
  }
  return true;
}

bool equivalent(const AffineMonomialMap& a, const AffineMonomialMap& b) {
  return a.zero_set() == b.zero_set() && a.free_set() == b.free_set() && contains(a, b) && contains(b, a);
}

bool canonical_less(const AffineMonomialMap& a, const AffineMonomialMap& b) {
  if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
  auto za = a.zero_set(), zb = b.zero_set();
  if (za != zb) return std::lexicographical_compare(za.begin(), za.end(), zb.begin(), zb.end());
  auto fa = a.free_set(), fb = b.free_set();
  if (fa != fb) return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
  if (a.d != b.d) return a.d < b.d;
  for (std::size_t k = 0; k < a.variable_count() && k < b.variable_count(); ++k) {
    const auto& va = a.variables[k];
    const auto& vb = b.variables[k];
    if (va.exponents != vb.exponents) return va.exponents < vb.exponents;
    if (va.coefficient != vb.coefficient) return va.coefficient < vb.coefficient;
  }
  return a.skipped < b.skipped;
}

std::vector<AffineMonomialMap> prune_components(std::vector<AffineMonomialMap> maps, unsigned threads) {
  std::stable_sort(maps.begin(), maps.end(), canonical_less);
  const std::size_t N = maps.size();
  std::vector<std::set<std::size_t>> zeros(N);
  for (std::size_t i = 0; i < N; ++i) zeros[i] = maps[i].zero_set();

  // Map i is dropped when a larger map, or an earlier one of equal dimension,
  // contains it. Transitivity makes this agree with checking kept maps only.
  // At equal dimension containment means equivalence, so only the run of
  // maps with the same dimension and zero set needs checking.
  std::vector<std::size_t> larger(N), run(N);
  for (std::size_t i = 0; i < N; ++i) {
    const std::size_t di = maps[i].dimension();
    larger[i] = (i > 0 && maps[i - 1].dimension() == di) ? larger[i - 1] : i;
    run[i] = (i > 0 && maps[i - 1].dimension() == di && zeros[i - 1] == zeros[i]) ? run[i - 1] : i;
  }
  std::vector<char> drop(N, 0);
  auto check = [&](std::size_t i) {
    auto test = [&](std::size_t j) {
      if (!std::includes(zeros[i].begin(), zeros[i].end(), zeros[j].begin(), zeros[j].end())) return false;
      return contains(maps[j], maps[i]);
    };
    for (std::size_t j = 0; j < larger[i]; ++j)
      if (test(j)) return void(drop[i] = 1);
    for (std::size_t j = run[i]; j < i; ++j)
      if (test(j)) return void(drop[i] = 1);
  };
  if (threads <= 1 || N < 2) {
    for (std::size_t i = 0; i < N; ++i) check(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < N;) check(i);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<AffineMonomialMap> out;
  for (std::size_t i = 0; i < N; ++i)
    if (!drop[i]) out.push_back(std::move(maps[i]));
  return out;
}

}  // namespace affmaps
