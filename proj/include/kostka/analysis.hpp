#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kostka/pi_poly.hpp"
#include "kostka/problem.hpp"
#include "kostka/types.hpp"

namespace kostka {

/// lambda_a(theta) = sin((a+1)theta)/sin(theta), the SU(2) character of the
/// irreducible of highest weight a on the torus.  Removable singularities at
/// 0 and pi are filled with the limit values a+1 and (-1)^a (a+1).
/// Domain [0, pi].
double lambda_a(int a, double theta);

/// F_a(theta) = 1 - 2cos(2a theta) + cos((2a+2)theta)
///            = 2(sin^2(a theta) - sin((2a+1)theta) sin(theta)).
double F_a(int a, double theta);

/// The a = 2 combination F(theta) = sin(5theta)sin(theta) - sin^2(2theta);
/// note F_2 = -2 F.
double F_special_a2(double theta);

/// ell_a: the chord of lambda_a through (0, a+1) and (pi/(a+1), 0).
double ell_a(int a, double theta);

/// C_a = (a+1)^3 / (3(a+1)^2 - 4): a bound for |lambda_a| past pi/(a+1),
/// via the Mercer-Caccia lower bound for sin(pi/(a+1)).
double C_a(int a);

/// The steeper chord through (pi/(a+1), 0) and (b_a, 2(a+1)/pi).
double script_L_a(int a, double theta);

/// Zero of ell_a - C_a: b_a = 2(a^2+2a-1)pi / ((a+1)(3a^2+6a-1)).
double L_a_zero(int a);

struct QuadratureReport {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  KostkaValue nearest_integer;
  double residual = 0.0;
  bool conclusive = false;  // error estimate below 0.25 and integer resolvable
};

/// Weyl-integral count: (2/pi) * integral over [0, pi] of
/// prod_i lambda_{a_i}(theta) * sin^2(theta).  Requires a valid problem and
/// n_points >= 64.
QuadratureReport kostka_quadrature(const SchubertProblem& p, int n_points = 8192);

/// Same integral for an arbitrary parts list (parity and validity not
/// enforced); odd sums integrate to zero.
QuadratureReport weyl_quadrature_raw(const std::vector<int>& parts, int n_points = 8192);

struct BoundCheck {
  std::string name;
  double max_violation = 0.0;
  bool pass = false;
};

struct SineBoundsReport {
  std::vector<BoundCheck> checks;
  double max_violation = 0.0;
  bool pass = false;
};

/// Samples the sine estimates used throughout:
///   (2/pi) x <= sin x            on [0, pi/2]
///   (2 sqrt2/pi) x <= sin x      on [0, pi/4]
///   sin x <= (4/pi^2) x (pi-x)   on [0, pi]
///   3x/pi - 4x^3/pi^3 <= sin x <= x   on [0, 4pi]   (Mercer-Caccia)
SineBoundsReport verify_sine_bounds(std::uint64_t samples);

struct IntervalCheckReport {
  std::string name;
  int a = 0;
  double worst = 0.0;  // signed worst margin; >= -1e-12 passes
  bool pass = false;
};

/// min of lambda_a and F_a over [0, pi/(a+1)] stays above -1e-12.  a >= 3.
IntervalCheckReport verify_F_nonneg(int a, std::uint64_t samples);
/// min of lambda_a - ell_a over [0, pi/(a+1)] stays above -1e-12.  a >= 2.
IntervalCheckReport verify_ell_bound(int a, std::uint64_t samples);
/// max of |lambda_a| - C_a over [pi/(a+1), pi/2] stays below 1e-12.  a >= 3.
IntervalCheckReport verify_C_bound(int a, std::uint64_t samples);

struct A2ChainReport {
  int mu = 0;
  double integral = 0.0;        // integral of lambda_2^mu F over [0, pi/3]
  double integral_err = 0.0;
  double margin_over_pi4 = 0.0;
  double tail_abs = 0.0;        // integral of |lambda_2^mu F| over [pi/3, pi/2]
  double tail_err = 0.0;
  double tail_pi4_slack = 0.0;  // pi/4 - tail_abs
  double product_bound_worst = 0.0;  // max |lambda_2 F| - 3/2 on [pi/3, pi/2]
  // mu = 14 only: the closed constant 1062882 sqrt3/17017 + 69 pi equals the
  // doubled integral; relative agreement of 2*integral with it
  double doubled_constant_relerr = -1.0;
  bool conclusive = false;
  bool pass = false;
};

/// The a = 2 chain: integral over [0, pi/3] of lambda_2^mu F must exceed
/// pi/4 (mu >= 14); the [pi/3, pi/2] tail obeys |lambda_2^mu F| <= 3/2 and
/// integrates to at most pi/4.
A2ChainReport verify_a2_chain(int mu, int n_points = 8192);

struct InductionIneqReport {
  int a = 0, mu = 0;
  double left = 0.0, right = 0.0;
  double combined_err = 0.0;
  bool conclusive = false;
  bool pass = false;  // left - right > combined_err
};

/// integral over [0, pi/(a+1)] of lambda_a^mu F_a versus the absolute
/// integral over [pi/(a+1), pi/2].  a >= 3, mu >= 4.
InductionIneqReport verify_induction_inequality(int a, int mu, int n_points = 8192);

/// Exact closed form of the envelope integral over [0, pi/(2(a+1))] of
/// (ell_a - C_a) F_a; cross-checked against quadrature in the tests.
double step_envelope_exact(int a);

/// Exact closed form of (a+1)^8/pi^4 * integral over [0, pi/(a+1)] of
/// (pi/(a+1) - theta)^4 F_a; the base-case lower-bound source.
double base_exact_estimate(int a);

struct AbStepReport {
  int a = 0, mu = 0;
  double A = 0.0, B = 0.0;
  CoefficientPositivity shifted;  // P(3+x, 3+y) coefficient certification
  bool pass = false;              // A > B and all shifted coefficients positive
};

/// Induction-step closed bounds:
///   A = 2^mu (a+1)^mu ((5pi^2-12)a^4 + (10pi^2-72)a^3 - (7pi^2+116)a^2 - 32a + 8)
///       / (8 pi^(mu+1) a^2 (3a^2+6a-1))
///   B = 2^(mu+2) (a+1)^(mu+4) / (pi^(mu-1) (mu+1)(mu+2) (3a^2+6a-1)^2)
/// (B is the exact value of the integral over [b_a, pi/(a+1)] of
/// 4|L_a| script_L^mu.)  P = (A-B) * common denominator / (2^mu (a+1)^mu) is
/// polynomial, degree 6 in a and 2 in mu; P(3+x, 3+y) is certified
/// coefficient-positive.  a >= 3, mu >= 3.
AbStepReport ab_bounds_step(int a, int mu);

/// The P(a, mu) above, before shifting.
PiPolynomial step_difference_polynomial();

struct AbBaseReport {
  int a = 0;
  double A = 0.0, B = 0.0;
  int degree = 0;
  CoefficientPositivity shifted;  // P(3+x) certification
  bool pass = false;
};

/// Base-case (mu = 4) closed bounds:
///   A = 6(a+1)^7/(pi^4 a^5) + pi(a+1)^3/5 - 2(a+1)^5/(pi a^2)
///       + 3(a+1)^7/(pi^3 a^4) + (a+1)^3/pi - 3(a+1)^3/(2 pi^3)
///   B = 4(a+1)/(3 sqrt2) + (a+1)^3/(12 sqrt2)
/// A - B = (a+1) P(a) / (120 pi^4 a^5) with P of degree seven; P(3+x) is
/// certified coefficient-positive.  a >= 3.
AbBaseReport ab_bounds_base(int a);

/// The degree-seven P(a) above, before shifting.
PiPolynomial base_difference_polynomial();

}  // namespace kostka
