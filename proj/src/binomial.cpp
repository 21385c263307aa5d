#include "affmaps/binomial.hpp"

#include <stdexcept>

namespace affmaps {

std::size_t AffineMonomialMap::free_count() const {
  std::size_t k = 0;
  for (const auto& v : variables) k += v.kind == VariableKind::Free;
  return k;
}

std::vector<bool> AffineMonomialMap::zero_mask() const {
  std::vector<bool> out(variables.size());
  for (std::size_t k = 0; k < variables.size(); ++k) out[k] = variables[k].kind == VariableKind::Zero;
  return out;
}

std::set<std::size_t> AffineMonomialMap::zero_set() const {
  std::set<std::size_t> out;
  for (std::size_t k = 0; k < variables.size(); ++k)
    if (variables[k].kind == VariableKind::Zero) out.insert(k);
  return out;
}

std::set<std::size_t> AffineMonomialMap::free_set() const {
  std::set<std::size_t> out;
  for (std::size_t k = 0; k < variables.size(); ++k)
    if (variables[k].kind == VariableKind::Free) out.insert(k);
  return out;
}

std::vector<std::size_t> AffineMonomialMap::link_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < variables.size(); ++k)
    if (variables[k].kind == VariableKind::Link) out.push_back(k);
  return out;
}

IntegerMatrix AffineMonomialMap::link_matrix() const {
  auto links = link_variables();
  IntegerMatrix out(links.size(), d);
  for (std::size_t r = 0; r < links.size(); ++r)
    for (std::size_t j = 0; j < d; ++j) out(r, j) = variables[links[r]].exponents[j];
  return out;
}

std::string AffineMonomialMap::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t k = 0; k < variables.size(); ++k) {
    const auto& v = variables[k];
    std::string rhs;
    switch (v.kind) {
      case VariableKind::Zero: rhs = "0"; break;
      case VariableKind::Free: rhs = "t" + std::to_string(v.parameter + 1) + " (free)"; break;
      case VariableKind::Link: {
        std::string mono;
        for (std::size_t j = 0; j < d; ++j) {
          if (v.exponents[j] == 0) continue;
          if (!mono.empty()) mono += "*";
          mono += "t" + std::to_string(j + 1);
          if (v.exponents[j] != 1) mono += "^" + v.exponents[j].get_str();
        }
        std::string c = v.coefficient.to_string();
        if (mono.empty()) rhs = c;
        else if (c == "1") rhs = mono;
        else if (c == "-1") rhs = "-" + mono;
        else rhs = "(" + c + ")*" + mono;
        break;
      }
    }
    out += (k ? ", " : "") + names[k] + " = " + rhs;
  }
  return out;
}

NormalizedBinomialSystem normalize_binomial(const System& s) {
  NormalizedBinomialSystem out;
  const std::size_t n = s.variable_count();
  out.A = IntegerMatrix(0, n);
  for (std::size_t i = 0; i < s.polynomials.size(); ++i) {
    const auto& terms = s.polynomials[i].terms();
    if (terms.size() != 2)
      throw std::invalid_argument("polynomial " + std::to_string(i + 1) + " has " +
                                  std::to_string(terms.size()) + " terms, expected 2");
    const Term* a = &terms[0];
    const Term* b = &terms[1];
    if (a->exponent < b->exponent) std::swap(a, b);
    std::vector<Integer> row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = a->exponent[k] - b->exponent[k];
    out.A.append_row(row);
    out.c.push_back(-b->coefficient / a->coefficient);
  }
  return out;
}

namespace {

// Integer completion R so that [V | R] is unimodular; V must be saturated.
IntegerMatrix unimodular_complement(const IntegerMatrix& V) {
  const std::size_t n = V.rows(), d = V.cols();
  IntegerMatrix R(n, n - d);
  if (d == 0) return IntegerMatrix::identity(n);
  HermiteForm hf = hermite_normal_form(V.transpose());
  std::vector<bool> pivot(n, false);
  for (auto c : hf.pivot_columns) pivot[c] = true;
  IntegerMatrix full(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) full(i, j) = V(i, j);
  for (std::size_t i = 0, col = 0; i < n; ++i)
    if (!pivot[i]) {
      R(i, col) = 1;
      full(i, d + col++) = 1;
    }
  if (abs(determinant(full)) == 1) return R;
  // P * V^T * Q = [I 0]; the last columns of Q^{-T} complete V
  SmithForm sf = smith_normal_form(V.transpose());
  RationalMatrix qinv = inverse(to_rational(sf.V));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n - d; ++j) R(i, j) = qinv(d + j, i).get_num();
  return R;
}

}  // namespace

ToricSolutionSet toric_solve(const NormalizedBinomialSystem& nbs, std::size_t n) {
  const IntegerMatrix& A = nbs.A;
  const std::size_t m = A.rows();
  std::vector<std::size_t> active, free_vars;
  for (std::size_t k = 0; k < n; ++k) {
    bool used = false;
    for (std::size_t i = 0; i < m && !used; ++i) used = A(i, k) != 0;
    (used ? active : free_vars).push_back(k);
  }
  const std::size_t na = active.size();
  IntegerMatrix Aa(m, na);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < na; ++j) Aa(i, j) = A(i, active[j]);

  IntegerMatrix V = integer_kernel(Aa);
  const std::size_t d = V.cols();
  const std::size_t r = na - d;
  IntegerMatrix R = unimodular_complement(V);
  IntegerMatrix B = Aa * R;
  SmithForm sf = smith_normal_form(B);

  std::vector<RadicalNumber> c;
  for (const auto& ci : nbs.c) c.push_back(RadicalNumber::from_gaussian(ci));
  auto rhs = [&](std::size_t l) {
    RadicalNumber v;
    for (std::size_t i = 0; i < m; ++i)
      if (sf.U(l, i) != 0) v *= c[i].pow(sf.U(l, i));
    return v;
  };
  ToricSolutionSet out;
  for (std::size_t l = r; l < m; ++l)
    if (!rhs(l).is_one()) return out;

  std::vector<std::vector<RadicalNumber>> choices(r);
  for (std::size_t l = 0; l < r; ++l) {
    const Integer& s = sf.diagonal[l];
    if (s == 0 || !s.fits_ulong_p()) throw std::logic_error("toric_solve: unexpected Smith invariant");
    choices[l] = rhs(l).roots(s.get_ui());
  }

  AffineMonomialMap base;
  base.variables.resize(n);
  base.d = d;
  base.W = d ? unimodular_extension(V, na).W : IntegerMatrix();
  for (std::size_t j = 0; j < free_vars.size(); ++j) {
    base.variables[free_vars[j]].kind = VariableKind::Free;
    base.variables[free_vars[j]].parameter = d + j;
  }
  for (std::size_t a = 0; a < na; ++a) {
    auto& v = base.variables[active[a]];
    v.kind = VariableKind::Link;
    v.exponents = V.row(a);
  }

  std::vector<std::size_t> pick(r, 0);
  for (;;) {
    AffineMonomialMap map = base;
    std::vector<RadicalNumber> y(r);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t l = 0; l < r; ++l)
        if (sf.V(k, l) != 0) y[k] *= choices[l][pick[l]].pow(sf.V(k, l));
    for (std::size_t a = 0; a < na; ++a) {
      RadicalNumber coeff;
      for (std::size_t k = 0; k < r; ++k)
        if (R(a, k) != 0) coeff *= y[k].pow(R(a, k));
      map.variables[active[a]].coefficient = coeff;
    }
    out.maps.push_back(std::move(map));
    std::size_t l = 0;
    while (l < r && ++pick[l] == choices[l].size()) pick[l++] = 0;
    if (l == r) break;
  }
  return out;
}

}  // namespace affmaps
