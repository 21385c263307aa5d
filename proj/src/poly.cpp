#include "affmaps/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_set>

namespace affmaps {

int grlex_compare(const ExponentVector& a, const ExponentVector& b) {
  long da = 0, db = 0;
  for (long e : a) da += e;
  for (long e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k)
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

namespace {

struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return grlex_compare(a, b) > 0;
  }
};

}  // namespace

Polynomial::Polynomial(std::vector<Term> terms) {
  std::map<ExponentVector, GaussianRational, GrlexGreater> acc;
  for (auto& t : terms) acc[std::move(t.exponent)] += t.coefficient;
  for (auto& [e, c] : acc)
    if (!c.is_zero()) terms_.push_back({c, e});
}

Polynomial Polynomial::specialize_zero(const std::vector<bool>& zero) const {
  Polynomial out;
  for (const auto& t : terms_) {
    bool vanishes = false;
    for (std::size_t k = 0; k < t.exponent.size() && !vanishes; ++k)
      vanishes = zero[k] && t.exponent[k] > 0;
    if (!vanishes) out.terms_.push_back(t);
  }
  return out;
}

Polynomial Polynomial::without_monomial_content() const {
  if (terms_.empty()) return *this;
  ExponentVector g = terms_.front().exponent;
  for (const auto& t : terms_)
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = std::min(g[k], t.exponent[k]);
  std::vector<Term> shifted = terms_;
  for (auto& t : shifted)
    for (std::size_t k = 0; k < g.size(); ++k) t.exponent[k] -= g[k];
  return Polynomial(std::move(shifted));
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, Slash, Semi, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size();) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    Token tok{Tok::End, "", line, col};
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      tok.kind = Tok::Number;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      tok.kind = Tok::Ident;
    } else {
      ++i;
      switch (ch) {
        case '+': tok.kind = Tok::Plus; break;
        case '-': tok.kind = Tok::Minus; break;
        case '*': tok.kind = Tok::Star; break;
        case '^': tok.kind = Tok::Caret; break;
        case '/': tok.kind = Tok::Slash; break;
        case ';': tok.kind = Tok::Semi; break;
        case ',': tok.kind = Tok::Comma; break;
        default:
          throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
      }
    }
    tok.text = std::string(text.substr(start, i - start));
    col += i - start;
    out.push_back(std::move(tok));
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  System run() {
    System s;
    while (peek().kind != Tok::Semi) {
      if (peek().kind == Tok::Comma) {
        next();
        continue;
      }
      const Token& t = expect(Tok::Ident, "variable name");
      if (t.text == "i") throw ParseError("'i' is reserved for the imaginary unit", t.line, t.column);
      if (index_.count(t.text) != 0)
        throw ParseError("duplicate variable name '" + t.text + "'", t.line, t.column);
      index_[t.text] = s.variables.size();
      s.variables.push_back(t.text);
    }
    next();
    n_ = s.variables.size();
    while (peek().kind != Tok::End) {
      s.polynomials.push_back(polynomial());
      expect(Tok::Semi, "';'");
    }
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  const Token& expect(Tok kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind) {
      if (t.kind == Tok::End) throw ParseError(std::string("expected ") + what + " before end of input", t.line, t.column);
      throw ParseError(std::string("expected ") + what + ", found '" + t.text + "'", t.line, t.column);
    }
    return next();
  }

  Polynomial polynomial() {
    std::vector<Term> terms;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        sign = next().kind == Tok::Minus ? -1 : 1;
      } else if (!first) {
        break;
      }
      Term t = term();
      if (sign < 0) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      first = false;
    }
    return Polynomial(std::move(terms));
  }

  Term term() {
    Term t{GaussianRational(1), ExponentVector(n_, 0)};
    for (;;) {
      factor(t);
      if (peek().kind != Tok::Star) break;
      next();
    }
    return t;
  }

  void factor(Term& t) {
    const Token& tok = peek();
    if (tok.kind == Tok::Number) {
      next();
      Rational v(Integer(tok.text));
      if (peek().kind == Tok::Slash) {
        next();
        const Token& d = expect(Tok::Number, "denominator");
        Integer den(d.text);
        if (den == 0) throw ParseError("zero denominator", d.line, d.column);
        v /= Rational(den);
      }
      t.coefficient *= GaussianRational(v);
      return;
    }
    if (tok.kind == Tok::Ident) {
      next();
      if (tok.text == "i") {
        t.coefficient *= GaussianRational(0, 1);
        return;
      }
      auto it = index_.find(tok.text);
      if (it == index_.end()) throw ParseError("unknown variable '" + tok.text + "'", tok.line, tok.column);
      long power = 1;
      if (peek().kind == Tok::Caret) {
        next();
        if (peek().kind == Tok::Minus) throw ParseError("negative exponent in input", peek().line, peek().column);
        const Token& e = expect(Tok::Number, "exponent");
        power = std::stol(e.text);
      }
      t.exponent[it->second] += power;
      return;
    }
    if (tok.kind == Tok::End) throw ParseError("unexpected end of input", tok.line, tok.column);
    throw ParseError("unexpected token '" + tok.text + "'", tok.line, tok.column);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t n_ = 0;
  std::map<std::string, std::size_t> index_;
};

std::string monomial_text(const ExponentVector& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[k];
    if (e[k] != 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

// one real-or-imaginary piece: |value| (*i) (*monomial)
std::string piece(const Rational& magnitude, bool imaginary, const std::string& mono) {
  std::string out;
  if (magnitude != 1) out = magnitude.get_str();
  if (imaginary) out += out.empty() ? "i" : "*i";
  if (!mono.empty()) out += out.empty() ? mono : "*" + mono;
  if (out.empty()) out = "1";
  return out;
}

}  // namespace

System parse_system(std::string_view text) {
  auto toks = tokenize(text);
  return Parser(std::move(toks)).run();
}

std::string serialize(const Polynomial& p, const std::vector<std::string>& variables) {
  if (p.is_zero()) return "0";
  std::string out;
  auto emit = [&](const Rational& v, bool imaginary, const std::string& mono) {
    bool neg = v < 0;
    std::string body = piece(abs(v), imaginary, mono);
    if (out.empty()) out = (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
  };
  for (const auto& t : p.terms()) {
    std::string mono = monomial_text(t.exponent, variables);
    if (t.coefficient.re != 0) emit(t.coefficient.re, false, mono);
    if (t.coefficient.im != 0) emit(t.coefficient.im, true, mono);
  }
  return out;
}

std::string serialize(const System& s) {
  std::string out;
  for (std::size_t k = 0; k < s.variables.size(); ++k) out += (k ? " " : "") + s.variables[k];
  out += ";\n";
  for (const auto& p : s.polynomials) out += serialize(p, s.variables) + ";\n";
  return out;
}

std::set<ExponentVector> support(const Polynomial& p) {
  std::set<ExponentVector> out;
  for (const auto& t : p.terms()) out.insert(t.exponent);
  return out;
}

bool is_binomial_system(const System& s) {
  return std::all_of(s.polynomials.begin(), s.polynomials.end(),
                     [](const Polynomial& p) { return p.size() == 2; });
}

}  // namespace affmaps
