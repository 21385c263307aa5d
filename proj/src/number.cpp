#include "affmaps/number.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace affmaps {

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Integer floor_of(const Rational& v) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

namespace {

Rational frac_part(const Rational& v) { return v - Rational(floor_of(v)); }

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto f = [&](const Integer& v) -> Integer {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer d = abs(x - y);
          q = (q * d) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Gaussian integers as (re, im).
struct GaussInt {
  Integer re;
  Integer im;
};

GaussInt gmul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// a / b when exact.
std::optional<GaussInt> gdiv_exact(const GaussInt& a, const GaussInt& b) {
  Integer n = b.re * b.re + b.im * b.im;
  GaussInt num = gmul(a, {b.re, -b.im});
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  return GaussInt{num.re / n, num.im / n};
}

Integer round_div(const Integer& a, const Integer& n) {
  // nearest integer to a/n, n > 0
  Integer t = 2 * a + n;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), Integer(2 * n).get_mpz_t());
  return q;
}

GaussInt ggcd(GaussInt a, GaussInt b) {
  while (b.re != 0 || b.im != 0) {
    Integer n = b.re * b.re + b.im * b.im;
    GaussInt num = gmul(a, {b.re, -b.im});
    GaussInt q{round_div(num.re, n), round_div(num.im, n)};
    GaussInt qb = gmul(q, b);
    GaussInt r{a.re - qb.re, a.im - qb.im};
    a = b;
    b = r;
  }
  return a;
}

// Rotates z by units into re > 0, im >= 0; returns the number k of
// multiplications by i applied.
int normalize_quadrant(GaussInt& z) {
  int k = 0;
  while (!(z.re > 0 && z.im >= 0)) {
    z = {-z.im, z.re};
    ++k;
  }
  return k;
}

GaussianPrime split_prime(const Integer& p) {
  Integer e = (p - 1) / 4, x;
  for (unsigned long a = 2;; ++a) {
    mpz_powm(x.get_mpz_t(), Integer(a).get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if ((x * x) % p == p - 1) break;
  }
  GaussInt g = ggcd({p, 0}, {x, 1});
  normalize_quadrant(g);
  return {g.re, g.im};
}

// w = exp(2 pi i phase) * prod p^e with integer exponents.
void factor_gaussian_integer(GaussInt w, Rational& phase, std::map<GaussianPrime, Rational>& out,
                             int sign) {
  Integer n = w.re * w.re + w.im * w.im;
  for (const auto& [p, mult] : factor_integer(n)) {
    std::vector<GaussianPrime> candidates;
    if (p == 2) {
      candidates.push_back({1, 1});
    } else if (p % 4 == 3) {
      candidates.push_back({p, 0});
    } else {
      GaussianPrime pi = split_prime(p);
      candidates.push_back(pi);
      candidates.push_back({pi.im, pi.re});
    }
    for (const auto& pi : candidates) {
      long count = 0;
      for (;;) {
        auto q = gdiv_exact(w, {pi.re, pi.im});
        if (!q) break;
        w = *q;
        ++count;
      }
      if (count != 0) out[pi] += Rational(sign * count);
    }
    (void)mult;
  }
  // remaining unit
  int k = 0;
  if (w.re == 1) k = 0;
  else if (w.im == 1) k = 1;
  else if (w.re == -1) k = 2;
  else if (w.im == -1) k = 3;
  else throw std::logic_error("gaussian factorization left a non-unit");
  Rational step(sign * k, 4);
  step.canonicalize();
  phase += step;
}

GaussianRational gpow(const GaussianRational& base, Integer e) {
  GaussianRational result(1), b = base;
  if (e < 0) {
    b = GaussianRational(1) / b;
    e = -e;
  }
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::string phase_prefix(const Rational& phase) {
  if (phase == 0) return "";
  if (phase == Rational(1, 2)) return "-";
  if (phase == Rational(1, 4)) return "i*";
  if (phase == Rational(3, 4)) return "-i*";
  return "exp(2*pi*i*" + phase.get_str() + ")*";
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n0) {
  if (n0 == 0) throw std::domain_error("factor_integer: zero");
  Integer n = abs(n0);
  std::map<Integer, unsigned> acc;
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++acc[Integer(p)];
      n /= p;
    }
  }
  factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = r;
  im = i;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  Rational n = o.norm();
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = r;
  im = i;
  return *this;
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  if (int c = cmp(a.re, b.re); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(a.im, b.im);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string GaussianRational::to_string() const {
  if (im == 0) return re.get_str();
  std::string imag;
  Rational a = abs(im);
  imag = (a == 1 ? std::string("i") : a.get_str() + "*i");
  if (re == 0) return (im < 0 ? "-" : "") + imag;
  return re.get_str() + (im < 0 ? "-" : "+") + imag;
}

std::strong_ordering operator<=>(const GaussianPrime& a, const GaussianPrime& b) {
  if (int c = cmp(a.re, b.re); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(a.im, b.im);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

void RadicalNumber::normalize() {
  phase_ = frac_part(phase_);
  for (auto it = factors_.begin(); it != factors_.end();) {
    if (it->second == 0) it = factors_.erase(it);
    else ++it;
  }
}

RadicalNumber RadicalNumber::from_gaussian(const GaussianRational& z) {
  if (z.is_zero()) throw std::domain_error("RadicalNumber of zero");
  Integer d = lcm(Integer(z.re.get_den()), Integer(z.im.get_den()));
  GaussInt w{Integer(z.re * d), Integer(z.im * d)};
  RadicalNumber r;
  factor_gaussian_integer(w, r.phase_, r.factors_, +1);
  factor_gaussian_integer({d, 0}, r.phase_, r.factors_, -1);
  r.normalize();
  return r;
}

RadicalNumber RadicalNumber::root_of_unity(const Rational& turns) {
  RadicalNumber r;
  r.phase_ = turns;
  r.normalize();
  return r;
}

RadicalNumber RadicalNumber::inverse() const {
  RadicalNumber r;
  r.phase_ = -phase_;
  for (const auto& [p, q] : factors_) r.factors_[p] = -q;
  r.normalize();
  return r;
}

RadicalNumber RadicalNumber::pow(const Integer& e) const {
  RadicalNumber r;
  if (e == 0) return r;
  Rational re(e);
  r.phase_ = phase_ * re;
  for (const auto& [p, q] : factors_) r.factors_[p] = q * re;
  r.normalize();
  return r;
}

std::vector<RadicalNumber> RadicalNumber::roots(unsigned long k) const {
  if (k == 0) throw std::domain_error("zeroth root");
  std::vector<RadicalNumber> out;
  out.reserve(k);
  for (unsigned long m = 0; m < k; ++m) {
    RadicalNumber r;
    r.phase_ = (phase_ + Rational(m)) / Rational(k);
    for (const auto& [p, q] : factors_) r.factors_[p] = q / Rational(k);
    r.normalize();
    out.push_back(std::move(r));
  }
  auto arg = [](const RadicalNumber& r) {
    double a = std::arg(r.to_complex());
    if (a < -1e-12) a += 2 * std::numbers::pi;
    return std::max(a, 0.0);
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const RadicalNumber& a, const RadicalNumber& b) { return arg(a) < arg(b); });
  return out;
}

RadicalNumber& RadicalNumber::operator*=(const RadicalNumber& o) {
  phase_ += o.phase_;
  for (const auto& [p, q] : o.factors_) factors_[p] += q;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const RadicalNumber& a, const RadicalNumber& b) {
  if (int c = cmp(a.phase_, b.phase_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  for (; ia != a.factors_.end() && ib != b.factors_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (int c = cmp(ia->second, ib->second); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ia != a.factors_.end()) return std::strong_ordering::greater;
  if (ib != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::optional<GaussianRational> RadicalNumber::to_gaussian() const {
  Rational four = phase_ * 4;
  if (four.get_den() != 1) return std::nullopt;
  for (const auto& [p, q] : factors_)
    if (q.get_den() != 1) return std::nullopt;
  static const GaussianRational units[4] = {GaussianRational(1), GaussianRational(0, 1),
                                            GaussianRational(-1), GaussianRational(0, -1)};
  GaussianRational v = units[Integer(four.get_num()).get_si() % 4];
  for (const auto& [p, q] : factors_) v *= gpow(GaussianRational(Rational(p.re), Rational(p.im)), Integer(q.get_num()));
  return v;
}

RadicalNumber RadicalNumber::coset_key() const {
  RadicalNumber r;
  r.phase_ = phase_ - Rational(floor_of(phase_ * 4), 4);
  for (const auto& [p, q] : factors_) r.factors_[p] = frac_part(q);
  r.normalize();
  return r;
}

std::complex<double> RadicalNumber::to_complex() const {
  long double log_mod = 0, ang = 2 * std::numbers::pi_v<long double> * phase_.get_d();
  for (const auto& [p, q] : factors_) {
    long double re = p.re.get_d(), im = p.im.get_d();
    long double qd = q.get_d();
    log_mod += qd * 0.5L * std::log(re * re + im * im);
    ang += qd * std::atan2(im, re);
  }
  long double m = std::exp(log_mod);
  return {static_cast<double>(m * std::cos(ang)), static_cast<double>(m * std::sin(ang))};
}

std::string RadicalNumber::to_string() const {
  if (auto g = to_gaussian()) return g->to_string();
  Rational display_phase = phase_;
  std::vector<std::string> parts;
  std::map<GaussianPrime, Rational> rest = factors_;
  while (!rest.empty()) {
    auto it = rest.begin();
    GaussianPrime p = it->first;
    Rational q = it->second;
    rest.erase(it);
    std::string base;
    if (p.im == 0) {
      base = p.re.get_str();
    } else if (p.re == 1 && p.im == 1) {
      // (1+i)^q = 2^(q/2) * exp(i pi q / 4)
      base = "2";
      display_phase += q / 8;
      q /= 2;
    } else {
      GaussianPrime partner{p.im, p.re};
      auto jt = rest.find(partner);
      if (jt != rest.end() && jt->second == q) {
        rest.erase(jt);
        // p^q * (i conj p)^q = |p|^(2q) * exp(i pi q / 2)
        base = Integer(p.re * p.re + p.im * p.im).get_str();
        display_phase += q / 4;
      } else {
        base = p.re.get_str() + "+" + (p.im == 1 ? std::string("i") : p.im.get_str() + "*i");
      }
    }
    if (q == 1) parts.push_back("(" + base + ")");
    else parts.push_back("(" + base + ")^(" + q.get_str() + ")");
  }
  display_phase = frac_part(display_phase);
  std::string out = phase_prefix(display_phase);
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

}  // namespace affmaps
