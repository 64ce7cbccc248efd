#pragma once

#include <string>
#include <vector>

#include "kostka/types.hpp"

namespace kostka {

/// Closed rational interval; arithmetic is exact, so enclosures certified
/// with it are machine-checked facts rather than float estimates.
struct RatInterval {
  Rational lo, hi;

  RatInterval() = default;
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit RatInterval(const Rational& exact) : lo(exact), hi(exact) {}

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator*(const RatInterval& o) const;
  RatInterval scaled(const Rational& c) const {
    return c >= 0 ? RatInterval{lo * c, hi * c} : RatInterval{hi * c, lo * c};
  }
};

/// 30-significant-digit rational brackets.
RatInterval pi_enclosure();
RatInterval sqrt2_enclosure();

/// Element of Q[pi] + sqrt(2)*Q[pi].  Exact coefficient ring for the
/// closed-form bound differences; pi and sqrt(2) are only given numeric
/// meaning at the very end, through enclosures.
class PiCoeff {
 public:
  PiCoeff() = default;
  static PiCoeff rational(Rational c);
  static PiCoeff pi_power(int k, Rational c, bool with_sqrt2 = false);

  PiCoeff& operator+=(const PiCoeff& o);
  PiCoeff operator*(const PiCoeff& o) const;  // folds sqrt(2)^2 = 2
  PiCoeff operator-() const;

  bool is_zero() const;
  Rational eval(const Rational& pi_value, const Rational& sqrt2_value) const;
  RatInterval enclose(const RatInterval& pi_i, const RatInterval& sqrt2_i) const;
  std::string to_string() const;

 private:
  std::vector<Rational> plain_;  // plain_[k] * pi^k
  std::vector<Rational> rt2_;    // sqrt(2) * rt2_[k] * pi^k
  void trim();
};

struct CoefficientPositivity {
  bool all_positive = false;
  int n_coefficients = 0;     // nonzero monomials examined
  int degree_x = 0, degree_y = 0;
  std::string offending_monomial;  // first non-certified one, empty if none
  double min_lower_bound = 0.0;    // smallest enclosure lower bound seen
};

/// Bivariate polynomial in (a, mu) over PiCoeff.  All arithmetic, including
/// the shift substitutions a -> a+s, mu -> mu+s, is exact.
class PiPolynomial {
 public:
  PiPolynomial() = default;

  static PiPolynomial constant(PiCoeff c);
  static PiPolynomial constant(Rational c) { return constant(PiCoeff::rational(std::move(c))); }
  /// c * pi^pi_pow * (sqrt2?) * a^a_pow * mu^mu_pow
  static PiPolynomial monomial(Rational c, int pi_pow, bool with_sqrt2, int a_pow, int mu_pow);
  static PiPolynomial var_a() { return monomial(1, 0, false, 1, 0); }
  static PiPolynomial var_mu() { return monomial(1, 0, false, 0, 1); }

  PiPolynomial operator+(const PiPolynomial& o) const;
  PiPolynomial operator-(const PiPolynomial& o) const;
  PiPolynomial operator*(const PiPolynomial& o) const;
  PiPolynomial pow(int k) const;

  PiPolynomial shift_a(int s) const;   // substitute a -> a + s
  PiPolynomial shift_mu(int s) const;  // substitute mu -> mu + s

  int degree_a() const;
  int degree_mu() const;
  const PiCoeff& coefficient(int a_pow, int mu_pow) const;

  /// Exact evaluation with every symbol replaced by a rational.
  Rational eval(const Rational& a, const Rational& mu, const Rational& pi_value,
                const Rational& sqrt2_value) const;

  /// Every nonzero coefficient must have enclosure lower bound > 0.
  CoefficientPositivity certify_positive(const RatInterval& pi_i,
                                         const RatInterval& sqrt2_i) const;
  CoefficientPositivity certify_positive() const {
    return certify_positive(pi_enclosure(), sqrt2_enclosure());
  }

 private:
  // coeff_[i][j] multiplies a^i mu^j
  std::vector<std::vector<PiCoeff>> coeff_;
  void ensure(int a_pow, int mu_pow);
  void trim();
};

}  // namespace kostka
