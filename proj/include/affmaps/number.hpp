#ifndef AFFMAPS_NUMBER_HPP
#define AFFMAPS_NUMBER_HPP

#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace affmaps {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Floor of a rational as an integer.
Integer floor_of(const Rational& v);

/// Prime factorization of |n| (n != 0) as (prime, multiplicity) pairs, ascending.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// Complex number a + b*i with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  /// "3", "-7/2", "2*i", "1/2-3*i".
  std::string to_string() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

/// A Gaussian prime normalized to the first quadrant: re > 0, im >= 0.
struct GaussianPrime {
  Integer re;
  Integer im;
  friend bool operator==(const GaussianPrime&, const GaussianPrime&) = default;
  friend std::strong_ordering operator<=>(const GaussianPrime& a, const GaussianPrime& b);
};

/// Exact element of the multiplicative group generated by nonzero Gaussian
/// rationals, their rational powers, and roots of unity:
///
///     exp(2*pi*i*phase) * prod_j p_j^(q_j)
///
/// with p_j normalized Gaussian primes, q_j nonzero rationals and p^q the
/// principal power exp(q * Log p). Unique factorization in Z[i] makes the
/// representation canonical, so equality is exact.
class RadicalNumber {
 public:
  RadicalNumber() = default;  // the value 1

  /// Throws std::domain_error for zero.
  static RadicalNumber from_gaussian(const GaussianRational& z);
  /// exp(2*pi*i*turns).
  static RadicalNumber root_of_unity(const Rational& turns);

  bool is_one() const { return phase_ == 0 && factors_.empty(); }
  const Rational& phase() const { return phase_; }
  const std::map<GaussianPrime, Rational>& factors() const { return factors_; }

  RadicalNumber inverse() const;
  RadicalNumber pow(const Integer& e) const;
  /// All k distinct k-th roots, sorted by argument in [0, 2*pi).
  std::vector<RadicalNumber> roots(unsigned long k) const;

  RadicalNumber& operator*=(const RadicalNumber& o);
  friend RadicalNumber operator*(RadicalNumber a, const RadicalNumber& b) { return a *= b; }
  friend RadicalNumber operator/(RadicalNumber a, const RadicalNumber& b) { return a *= b.inverse(); }
  friend bool operator==(const RadicalNumber&, const RadicalNumber&) = default;
  friend std::strong_ordering operator<=>(const RadicalNumber& a, const RadicalNumber& b);

  /// The value as a Gaussian rational when it is one.
  std::optional<GaussianRational> to_gaussian() const;
  /// Representative of the coset modulo nonzero Gaussian rationals; two values
  /// have a Gaussian-rational ratio iff their coset keys are equal.
  RadicalNumber coset_key() const;
  std::complex<double> to_complex() const;
  /// Exact text: a Gaussian rational when possible, otherwise a product such as
  /// "exp(2*pi*i*1/3)*(2)^(1/2)".
  std::string to_string() const;

 private:
  void normalize();

  Rational phase_;  // in [0, 1)
  std::map<GaussianPrime, Rational> factors_;
};

}  // namespace affmaps

#endif  // AFFMAPS_NUMBER_HPP
