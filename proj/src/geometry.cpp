#include "affmaps/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "affmaps/lp.hpp"

namespace affmaps {

namespace {

using IVec = std::vector<Integer>;

Integer dot(const IVec& a, const IVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec minus(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Cofactor normal of the hyperplane through D affinely independent points in
// dimension D: n_j = (-1)^j det of the difference matrix without column j.
// One elimination gives the kernel direction, one minor fixes the scale.
IVec hyperplane_normal(const std::vector<const IVec*>& pts) {
  const std::size_t D = pts[0]->size();
  const std::size_t R = D - 1;
  std::vector<std::vector<Rational>> m(R, std::vector<Rational>(D));
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < D; ++c) m[r][c] = Rational((*pts[r + 1])[c] - (*pts[0])[c]);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(D, false);
  for (std::size_t c = 0, row = 0; c < D && row < R; ++c) {
    std::size_t p = row;
    while (p < R && m[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (std::size_t k = c; k < D; ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < D; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    is_pivot[c] = true;
    ++row;
  }
  if (pivot_col.size() != R) return IVec(D, 0);
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> k(D, Rational(0));
  k[free_col] = 1;
  for (std::size_t r = 0; r < R; ++r) k[pivot_col[r]] = -m[r][free_col];

  IntegerMatrix minor(R, R);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0, cc = 0; c < D; ++c) {
      if (c == free_col) continue;
      minor(r, cc++) = (*pts[r + 1])[c] - (*pts[0])[c];
    }
  Integer scale = determinant(minor);
  if (free_col % 2 == 1) scale = -scale;
  IVec n(D);
  for (std::size_t j = 0; j < D; ++j) {
    Rational v = k[j] * scale;
    n[j] = v.get_num();
  }
  return n;
}

struct Facet {
  std::vector<std::size_t> vertices;  // sorted
  IVec normal;                        // outward
  Integer offset;
};

}  // namespace

Integer normalized_volume(const LatticePolytopePoints& p) {
  const std::size_t D = p.dimension;
  const auto& P = p.points;
  for (const auto& x : P)
    if (x.size() != D) throw std::invalid_argument("normalized_volume: point of wrong dimension");
  if (D == 0) return P.empty() ? Integer(0) : Integer(1);
  if (P.size() < D + 1) return 0;

  // Affinely independent start.
  std::vector<std::size_t> simplex{0};
  IntegerMatrix diffs;
  for (std::size_t i = 1; i < P.size() && simplex.size() < D + 1; ++i) {
    IntegerMatrix trial = diffs;
    trial.append_row(minus(P[i], P[0]));
    if (rank(trial) == trial.rows()) {
      diffs = std::move(trial);
      simplex.push_back(i);
    }
  }
  if (simplex.size() < D + 1) return 0;

  IVec interior(D, 0);  // (D+1) times the centroid of the start simplex
  for (std::size_t i : simplex)
    for (std::size_t j = 0; j < D; ++j) interior[j] += P[i][j];

  std::vector<Facet> boundary;
  auto make_facet = [&](std::vector<std::size_t> verts) {
    std::sort(verts.begin(), verts.end());
    std::vector<const IVec*> pts;
    for (std::size_t v : verts) pts.push_back(&P[v]);
    Facet f{verts, hyperplane_normal(pts), 0};
    f.offset = dot(f.normal, P[verts[0]]);
    if (dot(f.normal, interior) - Integer(D + 1) * f.offset > 0) {
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    return f;
  };
  // The cofactor normal makes <n, apex> - offset a simplex determinant.
  auto simplex_volume = [&](const Facet& f, std::size_t apex) { return Integer(abs(dot(f.normal, P[apex]) - f.offset)); };

  for (std::size_t skip = 0; skip <= D; ++skip) {
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i <= D; ++i)
      if (i != skip) verts.push_back(simplex[i]);
    boundary.push_back(make_facet(verts));
  }
  Integer volume = simplex_volume(boundary[0], simplex[0]);

  std::vector<bool> used(P.size(), false);
  for (std::size_t i : simplex) used[i] = true;
  for (std::size_t q = 0; q < P.size(); ++q) {
    if (used[q]) continue;
    std::vector<Facet> kept;
    std::map<std::vector<std::size_t>, int> ridges;
    for (auto& f : boundary) {
      if (dot(f.normal, P[q]) <= f.offset) {
        kept.push_back(std::move(f));
        continue;
      }
      volume += simplex_volume(f, q);
      for (std::size_t drop = 0; drop < D; ++drop) {
        std::vector<std::size_t> r;
        for (std::size_t k = 0; k < D; ++k)
          if (k != drop) r.push_back(f.vertices[k]);
        ++ridges[r];
      }
    }
    for (const auto& [r, count] : ridges) {
      if (count != 1) continue;
      std::vector<std::size_t> verts = r;
      verts.push_back(q);
      kept.push_back(make_facet(verts));
    }
    boundary = std::move(kept);
  }
  return volume;
}

Integer degree_of_map(const AffineMonomialMap& c) {
  const std::size_t e = c.free_count();
  const std::size_t D = c.d + e;
  LatticePolytopePoints pts{D, {IVec(D, 0)}};
  for (std::size_t j = 0; j < e; ++j) {
    IVec u(D, 0);
    u[c.d + j] = 1;
    pts.points.push_back(u);
  }
  const IntegerMatrix V = c.link_matrix();
  for (std::size_t r = 0; r < V.rows(); ++r) {
    IVec row(D, 0);
    for (std::size_t j = 0; j < c.d; ++j) row[j] = V(r, j);
    pts.points.push_back(row);
  }
  const Integer vol = normalized_volume(pts);
  const Integer index = lattice_index(V.transpose());
  if (index == 0 || vol % index != 0) throw std::logic_error("degree_of_map: volume not divisible by lattice index");
  return vol / index;
}

std::vector<EdgeWithCone> newton_edges(const std::set<ExponentVector>& support) {
  if (support.size() < 2) throw std::invalid_argument("newton_edges: fewer than two distinct points");
  std::vector<IVec> P;
  for (const auto& e : support) P.emplace_back(e.begin(), e.end());
  const std::size_t n = P[0].size();
  std::vector<EdgeWithCone> out;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      const IVec dir = minus(P[j], P[i]);
      std::size_t pivot = 0;
      while (dir[pivot] == 0) ++pivot;
      PolyhedralCone cone{n, {dir}, {}};
      bool edge = true;
      for (std::size_t k = 0; k < P.size() && edge; ++k) {
        if (k == i || k == j) continue;
        IVec off = minus(P[k], P[i]);
        // Collinear points must lie strictly between the endpoints.
        bool collinear = true;
        for (std::size_t a = 0; a < n && collinear; ++a) collinear = off[a] * dir[pivot] == dir[a] * off[pivot];
        if (collinear) {
          Rational lambda(off[pivot], dir[pivot]);
          lambda.canonicalize();
          edge = lambda > 0 && lambda < 1;
          continue;
        }
        cone.inequalities.push_back(std::move(off));
      }
      if (!edge) continue;
      auto v = cone_intersection({cone});
      if (!v) continue;
      out.push_back({ExponentVector{}, ExponentVector{}, std::move(cone), std::move(*v)});
      for (const auto& x : P[i]) out.back().first.push_back(x.get_si());
      for (const auto& x : P[j]) out.back().second.push_back(x.get_si());
    }
  return out;
}

Polynomial initial_form(const Polynomial& p, const WeightVector& w) {
  std::vector<std::pair<Rational, const Term*>> finite;
  for (const auto& t : p.terms()) {
    if (t.exponent.size() != w.size()) throw std::invalid_argument("initial_form: weight of wrong length");
    Rational s = 0;
    bool inf = false;
    for (std::size_t k = 0; k < w.size() && !inf; ++k) {
      if (t.exponent[k] == 0) continue;
      if (!w[k]) inf = true;
      else s += *w[k] * t.exponent[k];
    }
    if (!inf) finite.emplace_back(s, &t);
  }
  if (finite.empty()) return {};
  Rational best = finite[0].first;
  for (const auto& [s, t] : finite) best = std::min(best, s);
  std::vector<Term> kept;
  for (const auto& [s, t] : finite)
    if (s == best) kept.push_back(*t);
  return Polynomial(std::move(kept));
}

std::optional<std::vector<Rational>> cone_intersection(const std::vector<PolyhedralCone>& cones) {
  if (cones.empty()) return std::vector<Rational>{};
  const std::size_t n = cones[0].dimension;
  std::vector<LinearConstraint> cons;
  auto add = [&](const IVec& a, LinearConstraint::Kind kind, long rhs) {
    if (a.size() != n) throw std::invalid_argument("cone_intersection: dimension mismatch");
    LinearConstraint lc{std::vector<Rational>(a.begin(), a.end()), kind, Rational(rhs)};
    cons.push_back(std::move(lc));
  };
  for (const auto& c : cones) {
    if (c.dimension != n) throw std::invalid_argument("cone_intersection: dimension mismatch");
    for (const auto& e : c.equalities) add(e, LinearConstraint::Kind::Equal, 0);
    for (const auto& a : c.inequalities) add(a, LinearConstraint::Kind::GreaterEqual, 1);
  }
  return find_feasible_point(n, cons);
}

bool check_specialization_commutes(const System& s, const ZeroSelection& sel, const std::vector<Rational>& v) {
  const std::size_t n = s.variable_count();
  std::vector<bool> zero(n, false);
  for (std::size_t k : sel.variables) {
    if (k >= n || zero[k]) throw std::invalid_argument("check_specialization_commutes: malformed selection");
    zero[k] = true;
  }
  if (v.size() != n - sel.variables.size())
    throw std::invalid_argument("check_specialization_commutes: weight of wrong length");
  WeightVector w(n), vz(n);
  for (std::size_t k = 0, next = 0; k < n; ++k) {
    if (zero[k]) {
      vz[k] = Rational(0);
    } else {
      w[k] = v[next];
      vz[k] = v[next++];
    }
  }
  for (const auto& f : s.polynomials)
    if (initial_form(f.specialize_zero(zero), vz) != initial_form(f, w).specialize_zero(zero)) return false;
  return true;
}

std::vector<CandidateTuple> enumerate_tuples(const System& s, const EnumerationOptions& opts) {
  const std::size_t n = s.variable_count();
  const std::size_t N = s.polynomials.size();
  std::vector<CandidateTuple> out;
  for (const auto& sel : enumerate_candidates(s, opts)) {
    std::vector<bool> zero(n, false);
    for (std::size_t k : sel.variables) zero[k] = true;

    CandidateTuple base;
    base.selection = sel;
    base.s.assign(n, +1);
    base.e.assign(N, std::nullopt);
    for (std::size_t k : sel.variables) base.s[k] = 0;
    std::vector<std::vector<EdgeWithCone>> choices;
    bool viable = true;
    for (std::size_t i : sel.skipped) {
      Polynomial p = s.polynomials[i].specialize_zero(zero);
      if (p.size() < 2) {
        viable = false;
        break;
      }
      for (const auto& t : p.terms())
        for (std::size_t k = 0; k < n; ++k)
          if (t.exponent[k] > 0) base.s[k] = -1;
      choices.push_back(newton_edges(support(p)));
    }
    if (!viable) continue;

    std::vector<PolyhedralCone> cones;
    std::vector<std::size_t> pick(choices.size());
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
      if (depth == choices.size()) {
        auto v = cone_intersection(cones);
        CandidateTuple t = base;
        std::size_t q = 0;
        for (std::size_t i : sel.skipped) t.e[i] = choices[q][pick[q]], ++q;
        t.pretropism = cones.empty() ? std::vector<Rational>(n, Rational(0)) : *v;
        out.push_back(std::move(t));
        return;
      }
      for (std::size_t a = 0; a < choices[depth].size(); ++a) {
        cones.push_back(choices[depth][a].cone);
        if (cone_intersection(cones)) {
          pick[depth] = a;
          self(self, depth + 1);
        }
        cones.pop_back();
      }
    };
    recurse(recurse, 0);
  }
  return out;
}

}  // namespace affmaps
