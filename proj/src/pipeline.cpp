#include "affmaps/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include "json.hpp"
#include <sstream>
#include <stdexcept>
#include <thread>

#include "affmaps/membership.hpp"

namespace affmaps {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json rational_json(const Rational& v) {
  if (v.get_den() == 1) return integer_json(v.get_num());
  return v.get_str();
}

}  // namespace

System gen_adjacent_minors(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) throw std::invalid_argument("gen_adjacent_minors: need at least 2 rows and 2 columns");
  System s;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) s.variables.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  const std::size_t N = m * n;
  auto mono = [&](std::size_t a, std::size_t b) {
    ExponentVector e(N, 0);
    ++e[a];
    ++e[b];
    return e;
  };
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const std::size_t a = i * n + j, b = (i + 1) * n + j + 1, c = (i + 1) * n + j, d = i * n + j + 1;
      s.polynomials.emplace_back(std::vector<Term>{{GaussianRational(1), mono(a, b)}, {GaussianRational(-1), mono(c, d)}});
    }
  return s;
}

DecompositionReport decompose(const System& s, const DecomposeOptions& opts) {
  DecompositionReport r;
  r.system = s;
  r.binomial = is_binomial_system(s);
  const auto start = Clock::now();

  auto t0 = Clock::now();
  auto sels = enumerate_candidates(s, opts.enumeration);
  r.candidates = sels.size();
  if (!r.binomial) r.tuples = enumerate_tuples(s, opts.enumeration);
  r.timing.enumerate = since(t0);

  t0 = Clock::now();
  std::vector<std::vector<AffineMonomialMap>> parts(sels.size());
  std::vector<std::exception_ptr> errors(sels.size());
  auto work = [&](std::size_t i) {
    try {
      parts[i] = assemble_component(sels[i], s);
    } catch (const std::invalid_argument&) {
      if (r.binomial) errors[i] = std::current_exception();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned threads = opts.enumeration.threads;
  if (threads <= 1) {
    for (std::size_t i = 0; i < sels.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < sels.size();) work(i);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<AffineMonomialMap> raw;
  for (auto& part : parts)
    for (auto& m : part) raw.push_back(std::move(m));
  r.timing.assemble = since(t0);

  t0 = Clock::now();
  auto maps = prune_components(std::move(raw), opts.enumeration.threads);
  r.timing.prune = since(t0);

  t0 = Clock::now();
  r.total_degree = 0;
  for (auto& m : maps) {
    ReportComponent c;
    c.dimension = m.dimension();
    c.degree = opts.degrees ? degree_of_map(m) : Integer(0);
    for (std::size_t k : m.zero_set()) c.zero.push_back(k);
    for (std::size_t k : m.free_set()) c.free.push_back(k);
    c.skipped.assign(m.skipped.begin(), m.skipped.end());
    r.degree_by_dimension[c.dimension] += c.degree;
    r.total_degree += c.degree;
    c.map = std::move(m);
    r.components.push_back(std::move(c));
  }
  r.timing.degree = since(t0);
  r.timing.total = since(start);
  return r;
}

std::string to_json(const DecompositionReport& r, bool with_timing, int indent) {
  using nlohmann::json;
  const auto& names = r.system.variables;
  json j;
  j["system"]["variables"] = names;
  j["system"]["equations"] = json::array();
  for (const auto& p : r.system.polynomials) j["system"]["equations"].push_back(serialize(p, names));
  j["system"]["binomial"] = r.binomial;

  j["components"] = json::array();
  for (const auto& c : r.components) {
    json o;
    o["dimension"] = c.dimension;
    o["degree"] = integer_json(c.degree);
    o["zero"] = json::array();
    for (std::size_t k : c.zero) o["zero"].push_back(names[k]);
    o["free"] = json::array();
    o["link"] = json::array();
    for (std::size_t k = 0; k < c.map.variables.size(); ++k) {
      const auto& v = c.map.variables[k];
      if (v.kind == VariableKind::Free) {
        o["free"].push_back({{"variable", names[k]}, {"parameter", v.parameter + 1}});
      } else if (v.kind == VariableKind::Link) {
        json e = json::array();
        for (const auto& x : v.exponents) e.push_back(integer_json(x));
        o["link"].push_back({{"variable", names[k]}, {"coefficient", v.coefficient.to_string()}, {"exponents", e}});
      }
    }
    o["denominators"] = json::array();
    for (std::size_t i = 0; i < c.map.W.rows(); ++i) o["denominators"].push_back(integer_json(c.map.W(i, i)));
    o["skipped"] = c.skipped;
    o["map"] = c.map.to_string(names);
    j["components"].push_back(std::move(o));
  }

  if (!r.binomial) {
    j["tuples"] = json::array();
    for (const auto& t : r.tuples) {
      json o;
      o["status"] = t.s;
      o["zero"] = json::array();
      for (std::size_t k : t.selection.variables) o["zero"].push_back(names[k]);
      o["edges"] = json::array();
      std::vector<bool> zero(names.size(), false);
      for (std::size_t k : t.selection.variables) zero[k] = true;
      WeightVector w(names.size());
      for (std::size_t k = 0; k < names.size(); ++k) w[k] = t.pretropism[k];
      for (std::size_t i = 0; i < t.e.size(); ++i) {
        if (!t.e[i]) continue;
        auto form = initial_form(r.system.polynomials[i].specialize_zero(zero), w);
        o["edges"].push_back({{"equation", i}, {"initial_form", serialize(form, names)}});
      }
      json v = json::array();
      for (const auto& x : t.pretropism) v.push_back(rational_json(x));
      o["pretropism"] = v;
      j["tuples"].push_back(std::move(o));
    }
  }

  j["totals"]["candidates"] = r.candidates;
  j["totals"]["components"] = r.components.size();
  j["totals"]["degree"] = integer_json(r.total_degree);
  j["totals"]["degree_by_dimension"] = json::object();
  for (const auto& [d, deg] : r.degree_by_dimension) j["totals"]["degree_by_dimension"][std::to_string(d)] = integer_json(deg);

  if (with_timing) {
    j["timing_seconds"] = {{"enumerate", r.timing.enumerate}, {"assemble", r.timing.assemble},
                           {"prune", r.timing.prune},         {"degree", r.timing.degree},
                           {"total", r.timing.total}};
  }
  return j.dump(indent);
}

std::string to_text(const DecompositionReport& r) {
  std::ostringstream out;
  const auto& names = r.system.variables;
  out << r.components.size() << " component" << (r.components.size() == 1 ? "" : "s") << " from " << r.candidates
      << " candidate" << (r.candidates == 1 ? "" : "s") << "\n";
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    out << "[" << i + 1 << "] dimension " << c.dimension << ", degree " << c.degree;
    if (!c.skipped.empty()) {
      out << ", skipped";
      for (std::size_t k : c.skipped) out << " " << k + 1;
    }
    out << "\n    " << c.map.to_string(names) << "\n";
  }
  out << "degree by dimension:";
  for (const auto& [d, deg] : r.degree_by_dimension) out << " " << d << ":" << deg;
  out << "\ntotal degree " << r.total_degree << "\n";
  if (!r.binomial) {
    out << r.tuples.size() << " candidate tuple" << (r.tuples.size() == 1 ? "" : "s") << "\n";
    for (const auto& t : r.tuples) {
      std::vector<bool> zero(names.size(), false);
      for (std::size_t k : t.selection.variables) zero[k] = true;
      WeightVector w(names.size());
      for (std::size_t k = 0; k < names.size(); ++k) w[k] = t.pretropism[k];
      out << "  zero {";
      for (std::size_t q = 0; q < t.selection.variables.size(); ++q)
        out << (q ? ", " : "") << names[t.selection.variables[q]];
      out << "}";
      for (std::size_t i = 0; i < t.e.size(); ++i)
        if (t.e[i]) out << "  f" << i + 1 << ": " << serialize(initial_form(r.system.polynomials[i].specialize_zero(zero), w), names);
      out << "\n";
    }
  }
  return out.str();
}

std::vector<ScalingRow> bench_scaling(std::size_t n_max, unsigned threads, double min_seconds) {
  if (n_max < 3) throw std::invalid_argument("bench_scaling: n_max must be at least 3");
  std::vector<ScalingRow> rows;
  DecomposeOptions opts;
  opts.enumeration.pure_dimension = true;
  opts.enumeration.threads = threads;
  opts.degrees = false;
  for (std::size_t n = 3; n <= n_max; ++n) {
    const System s = gen_adjacent_minors(2, n);
    ScalingRow row{n, 0, 0};
    std::size_t runs = 0;
    const auto t0 = Clock::now();
    do {
      row.components = decompose(s, opts).components.size();
      ++runs;
    } while (since(t0) < min_seconds);
    row.seconds = since(t0) / static_cast<double>(runs);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace affmaps
