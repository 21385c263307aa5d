#include "affmaps/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace affmaps {

std::vector<std::size_t> IncidenceMatrix::column_sums() const {
  std::vector<std::size_t> out(variables, 0);
  for (const auto& r : rows)
    for (std::size_t k = 0; k < variables; ++k) out[k] += r.mask[k];
  return out;
}

namespace {

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::set<std::size_t> negative_variables(const System& s) {
  std::set<std::size_t> out;
  for (const auto& p : s.polynomials)
    for (const auto& t : p.terms())
      for (std::size_t k = 0; k < t.exponent.size(); ++k)
        if (t.exponent[k] < 0) out.insert(k);
  return out;
}

// a monomial is kept when no other monomial of its equation divides it
std::vector<bool> minimal_flags(const Polynomial& p) {
  const auto& terms = p.terms();
  std::vector<bool> keep(terms.size(), true);
  for (std::size_t a = 0; a < terms.size(); ++a)
    for (std::size_t b = 0; b < terms.size() && keep[a]; ++b)
      if (a != b && divides(terms[b].exponent, terms[a].exponent)) keep[a] = false;
  return keep;
}

struct Row {
  std::size_t eq;
  std::vector<std::uint32_t> vars;  // in branching priority order
  bool minimal;
};

struct State {
  std::vector<std::uint32_t> cnt;        // selected variables per row
  std::vector<std::uint32_t> survivors;  // uncovered rows per equation
  std::vector<std::uint32_t> banned;
  std::vector<char> skipped;
  std::vector<std::uint32_t> selection;
  std::size_t nskipped = 0;
  std::size_t broken = 0;  // skipped equations with fewer than two survivors
  std::size_t pos = 0;
};

class Engine {
 public:
  Engine(std::size_t n, std::vector<Row> rows, std::size_t m, bool allow_skip, bool binomial,
         const std::vector<std::size_t>& freq, const EnumerationOptions& opts)
      : n_(n), m_(m), rows_(std::move(rows)), allow_skip_(allow_skip), binomial_(binomial), opts_(opts) {
    eq_rows_.resize(m_);
    rows_of_var_.resize(n_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      eq_rows_[rows_[r].eq].push_back(r);
      for (auto v : rows_[r].vars) rows_of_var_[v].push_back(r);
    }
    auto var_before = [&](std::uint32_t a, std::uint32_t b) {
      if (opts_.greedy && freq[a] != freq[b]) return freq[a] > freq[b];
      return a < b;
    };
    for (auto& row : rows_) std::sort(row.vars.begin(), row.vars.end(), var_before);
    order_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) order_[i] = i;
    if (opts_.greedy) {
      std::vector<std::size_t> peak(m_, 0);
      for (const auto& row : rows_)
        if (row.minimal)
          for (auto v : row.vars) peak[row.eq] = std::max(peak[row.eq], freq[v]);
      std::stable_sort(order_.begin(), order_.end(),
                       [&](std::size_t a, std::size_t b) { return peak[a] > peak[b]; });
    }
    limit_ = opts_.max_codim.value_or(n_);
  }

  std::vector<ZeroSelection> run() {
    State st;
    st.cnt.assign(rows_.size(), 0);
    st.survivors.resize(m_);
    for (std::size_t e = 0; e < m_; ++e) st.survivors[e] = eq_rows_[e].size();
    st.banned.assign(n_, 0);
    st.skipped.assign(m_, 0);
    unsigned threads = opts_.sort_output ? opts_.threads : 1;
    if (threads <= 1 || m_ < 2) {
      dfs(st, out_);
      return std::move(out_);
    }
    split_ = std::min<std::size_t>(m_, 4);
    collecting_ = true;
    dfs(st, out_);
    collecting_ = false;
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    auto worker = [&] {
      std::vector<ZeroSelection> local;
      for (std::size_t k; (k = next++) < tasks_.size();) dfs(tasks_[k], local);
      std::lock_guard<std::mutex> lock(mu);
      out_.insert(out_.end(), local.begin(), local.end());
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return std::move(out_);
  }

 private:
  std::size_t cap(const State& st) const {
    std::size_t c = limit_;
    if (opts_.pure_dimension) c = std::min(c, m_ - st.nskipped);
    return c;
  }

  void select(State& st, std::uint32_t v) const {
    st.selection.push_back(v);
    for (auto r : rows_of_var_[v])
      if (st.cnt[r]++ == 0) {
        std::size_t e = rows_[r].eq;
        if (--st.survivors[e] == 1 && st.skipped[e]) ++st.broken;
      }
  }

  void unselect(State& st, std::uint32_t v) const {
    st.selection.pop_back();
    for (auto r : rows_of_var_[v])
      if (--st.cnt[r] == 0) {
        std::size_t e = rows_[r].eq;
        if (st.survivors[e]++ == 1 && st.skipped[e]) --st.broken;
      }
  }

  void dfs(State& st, std::vector<ZeroSelection>& out) {
    if (collecting_ && st.pos == split_) {
      tasks_.push_back(st);
      return;
    }
    if (st.pos == m_) {
      leaf(st, out);
      return;
    }
    std::size_t e = order_[st.pos];
    if (st.survivors[e] == 0) {
      ++st.pos;
      dfs(st, out);
      --st.pos;
      return;
    }
    annihilate(st, e, out);
    if (!allow_skip_) return;
    bool ok = binomial_ ? st.survivors[e] == eq_rows_[e].size() : st.survivors[e] >= 2;
    if (!ok) return;
    st.skipped[e] = 1;
    ++st.nskipped;
    if (binomial_)
      for (auto r : eq_rows_[e])
        for (auto v : rows_[r].vars) ++st.banned[v];
    if (st.selection.size() <= cap(st)) {
      ++st.pos;
      dfs(st, out);
      --st.pos;
    }
    if (binomial_)
      for (auto r : eq_rows_[e])
        for (auto v : rows_[r].vars) --st.banned[v];
    --st.nskipped;
    st.skipped[e] = 0;
  }

  void annihilate(State& st, std::size_t e, std::vector<ZeroSelection>& out) {
    std::size_t open = rows_.size();
    for (auto r : eq_rows_[e])
      if (rows_[r].minimal && st.cnt[r] == 0) {
        open = r;
        break;
      }
    if (open == rows_.size()) {
      ++st.pos;
      dfs(st, out);
      --st.pos;
      return;
    }
    if (st.selection.size() + 1 > cap(st)) return;
    std::vector<std::uint32_t> tried;
    for (auto v : rows_[open].vars) {
      if (st.banned[v]) continue;
      select(st, v);
      if (st.broken == 0) annihilate(st, e, out);
      unselect(st, v);
      // later branches exclude v so each minimal transversal is reached once;
      // general systems keep every route since a skipped equation can
      // justify variables that are redundant for the annihilated ones
      if (!allow_skip_ || binomial_) {
        ++st.banned[v];
        tried.push_back(v);
      }
    }
    for (auto v : tried) --st.banned[v];
  }

  void leaf(const State& st, std::vector<ZeroSelection>& out) const {
    if (opts_.pure_dimension && st.selection.size() != m_ - st.nskipped) return;
    for (auto v : st.selection) {
      bool needed = false;
      for (auto r : rows_of_var_[v])
        if (st.cnt[r] == 1) {
          needed = true;
          break;
        }
      if (!needed) return;
    }
    ZeroSelection sel;
    sel.variables.assign(st.selection.begin(), st.selection.end());
    std::sort(sel.variables.begin(), sel.variables.end());
    for (std::size_t e = 0; e < m_; ++e)
      if (st.skipped[e]) sel.skipped.push_back(e);
    out.push_back(std::move(sel));
  }

  std::size_t n_, m_;
  std::vector<Row> rows_;
  bool allow_skip_, binomial_;
  EnumerationOptions opts_;
  std::vector<std::vector<std::size_t>> eq_rows_;
  std::vector<std::vector<std::size_t>> rows_of_var_;
  std::vector<std::size_t> order_;
  std::size_t limit_ = 0;
  bool collecting_ = false;
  std::size_t split_ = 0;
  std::vector<State> tasks_;
  std::vector<ZeroSelection> out_;
};

std::vector<std::uint32_t> support_vars(const ExponentVector& e, const std::set<std::size_t>& dropped) {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] > 0 && !dropped.count(k)) out.push_back(static_cast<std::uint32_t>(k));
  return out;
}

std::vector<ZeroSelection> finish(std::vector<ZeroSelection> sels, const EnumerationOptions& opts) {
  if (opts.sort_output) {
    canonicalize(sels);
    return sels;
  }
  std::vector<ZeroSelection> out;
  std::set<ZeroSelection> seen;
  for (auto& z : sels)
    if (seen.insert(z).second) out.push_back(std::move(z));
  return out;
}

}  // namespace

void canonicalize(std::vector<ZeroSelection>& sels) {
  std::sort(sels.begin(), sels.end(), [](const ZeroSelection& a, const ZeroSelection& b) {
    if (a.variables.size() != b.variables.size()) return a.variables.size() < b.variables.size();
    return a < b;
  });
  sels.erase(std::unique(sels.begin(), sels.end()), sels.end());
}

IncidenceMatrix incidence_matrix(const System& s) {
  IncidenceMatrix m;
  m.variables = s.variable_count();
  m.equations = s.polynomials.size();
  m.dropped_variables = negative_variables(s);
  bool paired = is_binomial_system(s);
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
  for (std::size_t i = 0; i < s.polynomials.size(); ++i) {
    const auto& p = s.polynomials[i];
    std::size_t first = m.rows.size();
    // one row per distinct 0/1 pattern, represented by its lowest-degree monomial
    for (std::size_t t = p.size(); t-- > 0;) {
      IncidenceRow row{i, p.terms()[t].exponent, std::vector<bool>(m.variables, false)};
      for (auto v : support_vars(row.exponent, m.dropped_variables)) row.mask[v] = true;
      bool seen = false;
      for (std::size_t r = first; r < m.rows.size() && !seen; ++r) seen = m.rows[r].mask == row.mask;
      if (!seen) m.rows.push_back(std::move(row));
    }
    std::reverse(m.rows.begin() + first, m.rows.end());
    if (m.rows.size() - first == 2) pairing.emplace_back(first, first + 1);
    else paired = false;
  }
  if (paired) m.monomial_pairing = pairing;
  return m;
}

std::vector<ZeroSelection> enumerate_zero_sets(const IncidenceMatrix& m, const EnumerationOptions& opts) {
  std::vector<Row> rows;
  for (const auto& r : m.rows) {
    Row row{r.equation, {}, true};
    for (std::size_t k = 0; k < m.variables; ++k)
      if (r.mask[k]) row.vars.push_back(static_cast<std::uint32_t>(k));
    rows.push_back(std::move(row));
  }
  Engine engine(m.variables, std::move(rows), m.equations, false, false, m.column_sums(), opts);
  return finish(engine.run(), opts);
}

std::vector<ZeroSelection> enumerate_candidates(const System& s, const EnumerationOptions& opts) {
  auto dropped = negative_variables(s);
  std::vector<Row> rows;
  for (std::size_t i = 0; i < s.polynomials.size(); ++i) {
    const auto& p = s.polynomials[i];
    auto keep = minimal_flags(p);
    for (std::size_t t = 0; t < p.size(); ++t)
      rows.push_back({i, support_vars(p.terms()[t].exponent, dropped), keep[t]});
  }
  Engine engine(s.variable_count(), std::move(rows), s.polynomials.size(), true, is_binomial_system(s),
                incidence_matrix(s).column_sums(), opts);
  return finish(engine.run(), opts);
}

std::vector<AffineMonomialMap> assemble_component(const ZeroSelection& sel, const System& s) {
  const std::size_t n = s.variable_count();
  std::vector<bool> zero(n, false);
  for (auto v : sel.variables) zero.at(v) = true;
  std::vector<Polynomial> reduced;
  for (auto e : sel.skipped) {
    Polynomial p = s.polynomials.at(e).specialize_zero(zero).without_monomial_content();
    if (p.size() > 2)
      throw std::invalid_argument("equation " + std::to_string(e + 1) + " is not binomial after specialization");
    if (p.size() == 1) return {};
    if (p.size() == 2) reduced.push_back(std::move(p));
  }
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < n; ++k)
    if (!zero[k]) rest.push_back(k);
  System sub;
  for (auto k : rest) sub.variables.push_back(s.variables[k]);
  for (const auto& p : reduced) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      ExponentVector e(rest.size());
      for (std::size_t j = 0; j < rest.size(); ++j) e[j] = t.exponent[rest[j]];
      terms.push_back({t.coefficient, std::move(e)});
    }
    sub.polynomials.emplace_back(std::move(terms));
  }
  NormalizedBinomialSystem nbs;
  if (sub.polynomials.empty()) nbs.A = IntegerMatrix(0, rest.size());
  else nbs = normalize_binomial(sub);
  std::vector<AffineMonomialMap> out;
  for (auto& m : toric_solve(nbs, rest.size()).maps) {
    AffineMonomialMap full;
    full.d = m.d;
    full.W = m.W;
    full.variables.resize(n);
    for (std::size_t j = 0; j < rest.size(); ++j) full.variables[rest[j]] = m.variables[j];
    full.skipped.insert(sel.skipped.begin(), sel.skipped.end());
    out.push_back(std::move(full));
  }
  return out;
}

}  // namespace affmaps
