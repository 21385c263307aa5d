#ifndef AFFMAPS_POLY_HPP
#define AFFMAPS_POLY_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "affmaps/number.hpp"

namespace affmaps {

using ExponentVector = std::vector<long>;

/// Graded-lexicographic comparison: total degree first, then lexicographic.
int grlex_compare(const ExponentVector& a, const ExponentVector& b);

struct Term {
  GaussianRational coefficient;
  ExponentVector exponent;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with nonzero coefficients, terms in descending
/// graded-lex order and no repeated exponents.
class Polynomial {
 public:
  Polynomial() = default;
  /// Combines like terms and drops zeros.
  explicit Polynomial(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Drops every term in which one of the flagged variables has a positive exponent.
  Polynomial specialize_zero(const std::vector<bool>& zero) const;
  /// Divides by the gcd monomial of the terms.
  Polynomial without_monomial_content() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

struct System {
  std::vector<std::string> variables;
  std::vector<Polynomial> polynomials;

  std::size_t variable_count() const { return variables.size(); }
  friend bool operator==(const System&, const System&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the text format
///
///     x y z;          # variable declaration
///     x*y - 1;        # one polynomial per statement
///     -7/2*x^2 + 3*i*z;
///
/// Throws ParseError with 1-based line/column.
System parse_system(std::string_view text);

std::string serialize(const Polynomial& p, const std::vector<std::string>& variables);
std::string serialize(const System& s);

std::set<ExponentVector> support(const Polynomial& p);

bool is_binomial_system(const System& s);

}  // namespace affmaps

#endif  // AFFMAPS_POLY_HPP
