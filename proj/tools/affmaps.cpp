#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "affmaps/enumerate.hpp"
#include "affmaps/geometry.hpp"
#include "affmaps/pipeline.hpp"
#include "json.hpp"

using namespace affmaps;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

System read_system(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return parse_system(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

WeightVector parse_weights(const std::string& spec) {
  WeightVector w;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok == "inf" || tok == "+inf") {
      w.push_back(std::nullopt);
      continue;
    }
    Rational r;
    if (tok.empty() || r.set_str(tok, 10) != 0) throw InputError("bad weight '" + tok + "'");
    r.canonicalize();
    w.push_back(r);
  }
  return w;
}

std::string selection_text(const ZeroSelection& sel, const System& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < sel.variables.size(); ++i) out += (i ? ", " : "") + s.variables[sel.variables[i]];
  out += "}";
  if (!sel.skipped.empty()) {
    out += " skip";
    for (std::size_t i : sel.skipped) out += " " + std::to_string(i + 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine solution sets of sparse polynomial systems"};
  app.require_subcommand(1);

  std::string file;
  bool pure = false, greedy = false, json = false;
  std::size_t max_codim = 0;
  unsigned threads = 1;
  auto enumeration_flags = [&](CLI::App* sub) {
    sub->add_option("file", file, "System file, '-' for stdin")->required();
    sub->add_flag("--pure", pure, "Only components of the expected dimension");
    sub->add_option("--max-codim", max_codim, "Largest number of zero variables");
    sub->add_flag("--greedy", greedy, "Try frequent variables first");
    sub->add_flag("--json", json, "JSON output");
    sub->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* solve = app.add_subcommand("solve", "Decompose a system into affine monomial maps");
  enumeration_flags(solve);
  auto* zeros = app.add_subcommand("enum-zeros", "List candidate zero selections");
  enumeration_flags(zeros);

  auto* inform = app.add_subcommand("initial-form", "Initial forms of every equation");
  std::string weight;
  inform->add_option("file", file, "System file, '-' for stdin")->required();
  inform->add_option("--weight", weight, "Comma separated weights, 'inf' allowed")->required();

  auto* bench = app.add_subcommand("bench", "Benchmarks");
  bench->require_subcommand(1);
  auto* minors = bench->add_subcommand("adjacent-minors", "Adjacent 2x2 minors of a matrix");
  std::size_t rows = 2, cols = 4, scaling = 0;
  minors->add_option("--rows", rows, "Matrix rows")->check(CLI::PositiveNumber);
  minors->add_option("--cols", cols, "Matrix columns")->check(CLI::PositiveNumber);
  minors->add_option("--scaling", scaling, "Time the 2xn minors for n = 3..NMAX");
  minors->add_flag("--pure", pure, "Only components of the expected dimension");
  minors->add_flag("--json", json, "JSON output");
  minors->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  DecomposeOptions opts;
  opts.enumeration.pure_dimension = pure;
  opts.enumeration.greedy = greedy;
  opts.enumeration.threads = threads;
  if (max_codim > 0 || solve->count("--max-codim") || zeros->count("--max-codim")) opts.enumeration.max_codim = max_codim;

  try {
    if (*solve) {
      auto r = decompose(read_system(file), opts);
      std::cout << (json ? to_json(r) + "\n" : to_text(r));
    } else if (*zeros) {
      const System s = read_system(file);
      auto sels = enumerate_candidates(s, opts.enumeration);
      if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& sel : sels) {
          nlohmann::json z = nlohmann::json::array();
          for (std::size_t k : sel.variables) z.push_back(s.variables[k]);
          out.push_back({{"zero", z}, {"skipped", sel.skipped}});
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& sel : sels) std::cout << selection_text(sel, s) << "\n";
      }
    } else if (*inform) {
      const System s = read_system(file);
      const WeightVector w = parse_weights(weight);
      if (w.size() != s.variable_count())
        throw InputError("expected " + std::to_string(s.variable_count()) + " weights, got " + std::to_string(w.size()));
      for (const auto& p : s.polynomials) {
        Polynomial f = initial_form(p, w);
        std::cout << (f.is_zero() ? std::string("0") : serialize(f, s.variables)) << ";\n";
      }
    } else if (*minors) {
      if (scaling > 0) {
        auto table = bench_scaling(scaling, threads);
        if (json) {
          nlohmann::json out = nlohmann::json::array();
          for (const auto& row : table) out.push_back({{"n", row.n}, {"components", row.components}, {"seconds", row.seconds}});
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << "n components seconds ratio\n";
          for (std::size_t i = 0; i < table.size(); ++i) {
            std::cout << table[i].n << " " << table[i].components << " " << table[i].seconds;
            if (i > 0) std::cout << " " << table[i].seconds / table[i - 1].seconds;
            std::cout << "\n";
          }
        }
      } else {
        if (rows < 2 || cols < 2) throw InputError("adjacent minors need at least 2 rows and 2 columns");
        auto r = decompose(gen_adjacent_minors(rows, cols), opts);
        std::cout << (json ? to_json(r) + "\n" : to_text(r));
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
