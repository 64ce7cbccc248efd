#include "kostka/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "kostka/quadrature.hpp"

namespace kostka {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSingularWindow = 1e-8;
constexpr double kSampleTol = 1e-12;
}  // namespace

double lambda_a(int a, double theta) {
  if (a < 1) throw std::invalid_argument("lambda_a: a must be >= 1");
  if (theta < 0.0 || theta > kPi) {
    throw std::domain_error("lambda_a: theta outside [0, pi]");
  }
  if (theta < kSingularWindow) return a + 1.0;
  if (kPi - theta < kSingularWindow) return (a % 2 == 0 ? 1.0 : -1.0) * (a + 1.0);
  return std::sin((a + 1.0) * theta) / std::sin(theta);
}

double F_a(int a, double theta) {
  if (a < 1) throw std::invalid_argument("F_a: a must be >= 1");
  return 1.0 - 2.0 * std::cos(2.0 * a * theta) + std::cos((2.0 * a + 2.0) * theta);
}

double F_special_a2(double theta) {
  double s2 = std::sin(2.0 * theta);
  return std::sin(5.0 * theta) * std::sin(theta) - s2 * s2;
}

double ell_a(int a, double theta) {
  double ap1 = a + 1.0;
  return ap1 * ap1 / kPi * (kPi / ap1 - theta);
}

double C_a(int a) {
  double ap1 = a + 1.0;
  return ap1 * ap1 * ap1 / (3.0 * ap1 * ap1 - 4.0);
}

double script_L_a(int a, double theta) {
  double d = 3.0 * a * a + 6.0 * a - 1.0;
  return 2.0 * d / (kPi * kPi) * (kPi / (a + 1.0) - theta);
}

double L_a_zero(int a) {
  double d = 3.0 * a * a + 6.0 * a - 1.0;
  return 2.0 * (a * (a + 2.0) - 1.0) * kPi / ((a + 1.0) * d);
}

namespace {

double weyl_integrand(const std::vector<int>& parts, double theta) {
  double s = std::sin(theta);
  double acc = s * s;
  for (int a : parts) acc *= lambda_a(a, theta);
  return acc;
}

QuadratureReport finish_report(IntegralEstimate est) {
  QuadratureReport r;
  r.value = est.value;
  r.abs_error_estimate = est.abs_error;
  if (std::abs(est.value) < 1e15) {
    r.nearest_integer = KostkaValue(std::llround(est.value));
    r.residual = std::abs(est.value - std::llround(est.value));
    r.conclusive = est.abs_error < 0.25 && r.residual < 0.5;
  } else {
    r.residual = std::numeric_limits<double>::infinity();
    r.conclusive = false;
  }
  return r;
}

}  // namespace

QuadratureReport weyl_quadrature_raw(const std::vector<int>& parts, int n_points) {
  if (n_points < 64) throw std::invalid_argument("quadrature needs n_points >= 64");
  for (int a : parts) {
    if (a < 1) throw std::invalid_argument("quadrature: parts must be positive");
  }
  auto f = [&parts](double t) { return 2.0 / kPi * weyl_integrand(parts, t); };
  return finish_report(integrate_refined(f, 0.0, kPi, n_points));
}

QuadratureReport kostka_quadrature(const SchubertProblem& p, int n_points) {
  if (!is_valid(p)) {
    throw std::invalid_argument("kostka_quadrature requires a valid problem");
  }
  return weyl_quadrature_raw(p.parts(), n_points);
}

SineBoundsReport verify_sine_bounds(std::uint64_t samples) {
  if (samples < 1000) throw std::invalid_argument("verify_sine_bounds: samples >= 10^3");
  SineBoundsReport report;
  auto grid_max = [samples](auto&& f, double lo, double hi) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::uint64_t k = 0; k <= samples; ++k) {
      double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(samples);
      worst = std::max(worst, f(x));
    }
    return worst;
  };
  // violation := how far the claimed inequality fails; negative is slack
  report.checks.push_back(
      {"sin_concave_2_over_pi",
       grid_max([](double x) { return 2.0 / kPi * x - std::sin(x); }, 0.0, kPi / 2), false});
  report.checks.push_back(
      {"sin_concave_2sqrt2_over_pi",
       grid_max([](double x) { return 2.0 * std::sqrt(2.0) / kPi * x - std::sin(x); }, 0.0,
                kPi / 4),
       false});
  report.checks.push_back(
      {"sin_parabola_upper",
       grid_max([](double x) { return std::sin(x) - 4.0 / (kPi * kPi) * x * (kPi - x); }, 0.0,
                kPi),
       false});
  report.checks.push_back(
      {"mercer_caccia_lower",
       grid_max(
           [](double x) {
             return 3.0 * x / kPi - 4.0 * x * x * x / (kPi * kPi * kPi) - std::sin(x);
           },
           0.0, 4.0 * kPi),
       false});
  report.checks.push_back(
      {"sin_linear_upper", grid_max([](double x) { return std::sin(x) - x; }, 0.0, 4.0 * kPi),
       false});
  report.max_violation = -std::numeric_limits<double>::infinity();
  report.pass = true;
  for (auto& c : report.checks) {
    c.pass = c.max_violation <= kSampleTol;
    report.max_violation = std::max(report.max_violation, c.max_violation);
    report.pass = report.pass && c.pass;
  }
  return report;
}

namespace {

// sampled extremum over [lo, hi], endpoints included
template <class F>
double sampled_min(F&& f, double lo, double hi, std::uint64_t samples) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0; k <= samples; ++k) {
    double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(samples);
    worst = std::min(worst, f(x));
  }
  return worst;
}

}  // namespace

IntervalCheckReport verify_F_nonneg(int a, std::uint64_t samples) {
  if (a < 3) throw std::invalid_argument("verify_F_nonneg: a >= 3");
  IntervalCheckReport r{"F_a_and_lambda_a_nonnegative", a, 0.0, false};
  double hi = kPi / (a + 1.0);
  double worst_f = sampled_min([a](double t) { return F_a(a, t); }, 0.0, hi, samples);
  double worst_l = sampled_min([a](double t) { return lambda_a(a, t); }, 0.0, hi, samples);
  r.worst = std::min(worst_f, worst_l);
  r.pass = r.worst >= -kSampleTol;
  return r;
}

IntervalCheckReport verify_ell_bound(int a, std::uint64_t samples) {
  if (a < 2) throw std::invalid_argument("verify_ell_bound: a >= 2");
  IntervalCheckReport r{"ell_a_below_lambda_a", a, 0.0, false};
  double hi = kPi / (a + 1.0);
  r.worst = sampled_min([a](double t) { return lambda_a(a, t) - ell_a(a, t); }, 0.0, hi, samples);
  r.pass = r.worst >= -kSampleTol;
  return r;
}

IntervalCheckReport verify_C_bound(int a, std::uint64_t samples) {
  if (a < 3) throw std::invalid_argument("verify_C_bound: a >= 3");
  IntervalCheckReport r{"lambda_a_bounded_by_C_a", a, 0.0, false};
  double ca = C_a(a);
  r.worst = sampled_min([a, ca](double t) { return ca - std::abs(lambda_a(a, t)); },
                        kPi / (a + 1.0), kPi / 2.0, samples);
  r.pass = r.worst >= -kSampleTol;
  return r;
}

namespace {

// |f| over [lo, hi] split at the natural breakpoints (multiples of
// pi/(a+1)), where the sign pattern of lambda_a changes.
template <class F>
IntegralEstimate integrate_abs_pieces(F&& f, double lo, double hi, double period, int n_points) {
  IntegralEstimate total{0.0, 0.0};
  double start = lo;
  int k = static_cast<int>(std::floor(lo / period)) + 1;
  auto g = [&f](double t) { return std::abs(f(t)); };
  while (start < hi - 1e-15) {
    double stop = std::min(hi, k * period);
    if (stop <= start + 1e-15) {
      ++k;
      continue;
    }
    int pts = std::max(256, static_cast<int>(n_points * (stop - start) / (hi - lo)));
    IntegralEstimate piece = integrate_refined(g, start, stop, pts);
    total.value += piece.value;
    total.abs_error += piece.abs_error;
    start = stop;
    ++k;
  }
  return total;
}

}  // namespace

A2ChainReport verify_a2_chain(int mu, int n_points) {
  if (mu < 14) throw std::invalid_argument("verify_a2_chain: mu >= 14");
  A2ChainReport r;
  r.mu = mu;
  auto f = [mu](double t) { return std::pow(lambda_a(2, t), mu) * F_special_a2(t); };

  IntegralEstimate head = integrate_refined(f, 0.0, kPi / 3.0, n_points);
  r.integral = head.value;
  r.integral_err = head.abs_error;
  r.margin_over_pi4 = head.value - kPi / 4.0;

  IntegralEstimate tail = integrate_abs_pieces(f, kPi / 3.0, kPi / 2.0, kPi / 3.0, n_points);
  r.tail_abs = tail.value;
  r.tail_err = tail.abs_error;
  r.tail_pi4_slack = kPi / 4.0 - tail.value;

  // |lambda_2 F| <= 3/2 on [pi/3, pi/2]
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 20000; ++k) {
    double t = kPi / 3.0 + (kPi / 2.0 - kPi / 3.0) * k / 20000.0;
    worst = std::max(worst, std::abs(lambda_a(2, t) * F_special_a2(t)) - 1.5);
  }
  r.product_bound_worst = worst;

  if (mu == 14) {
    // the closed constant equals the doubled integral (the F_a-normalized
    // integrand carries the factor 2)
    double exact = 1062882.0 / 17017.0 * std::sqrt(3.0) + 69.0 * kPi;
    r.doubled_constant_relerr = std::abs(2.0 * head.value - exact) / exact;
  }

  r.conclusive = r.margin_over_pi4 > head.abs_error;
  r.pass = r.conclusive && r.tail_pi4_slack > -tail.abs_error && worst <= kSampleTol &&
           (mu != 14 || r.doubled_constant_relerr < 1e-8);
  return r;
}

InductionIneqReport verify_induction_inequality(int a, int mu, int n_points) {
  if (a < 3 || mu < 4) throw std::invalid_argument("verify_induction_inequality: a >= 3, mu >= 4");
  InductionIneqReport r;
  r.a = a;
  r.mu = mu;
  double split = kPi / (a + 1.0);
  auto f = [a, mu](double t) { return std::pow(lambda_a(a, t), mu) * F_a(a, t); };
  IntegralEstimate left = integrate_refined(f, 0.0, split, n_points);
  IntegralEstimate right = integrate_abs_pieces(f, split, kPi / 2.0, split, n_points);
  r.left = left.value;
  r.right = right.value;
  r.combined_err = left.abs_error + right.abs_error;
  r.pass = left.value - right.value > r.combined_err;
  r.conclusive = r.pass || right.value - left.value > r.combined_err;
  return r;
}

double step_envelope_exact(int a) {
  // exact value of the integral over [0, pi/(2(a+1))] of (ell_a - C_a) F_a
  double A = a;
  double d = 3 * A * A + 6 * A - 1;
  double c = std::cos(A * kPi / (A + 1));
  double s = std::sin(A * kPi / (A + 1));
  double p2 = kPi * kPi;
  double bracket = (5 * p2 * A * A * A * A + (10 * p2 - 24) * A * A * A -
                    (7 * p2 + 60) * A * A - 16 * A + 4) +
                   c * (12 * A * A * A * A + 48 * A * A * A + 56 * A * A + 16 * A - 4) +
                   s * (-4 * kPi * A * A * A * A - 12 * kPi * A * A * A + 4 * kPi * A * A +
                        12 * kPi * A);
  return bracket / (8 * kPi * A * A * d);
}

double base_exact_estimate(int a) {
  double A = a;
  double u = A + 1;
  double p = kPi;
  return 3 * std::pow(u, 8) / (2 * std::pow(A, 5) * std::pow(p, 4)) * std::sin(2 * p / u) +
         p * u * u * u / 5 - 2 * std::pow(u, 5) / (p * A * A) +
         3 * std::pow(u, 7) / (std::pow(p, 3) * std::pow(A, 4)) + u * u * u / p -
         3 * u * u * u / (2 * std::pow(p, 3));
}

namespace {

double pow_di(double base, int e) { return std::pow(base, e); }

}  // namespace

PiPolynomial step_difference_polynomial() {
  using PP = PiPolynomial;
  auto mono = [](long long c, int pi_pow, int a_pow, int mu_pow) {
    return PP::monomial(Rational(c), pi_pow, false, a_pow, mu_pow);
  };
  // (5pi^2-12)a^4 + (10pi^2-72)a^3 - (7pi^2+116)a^2 - 32a + 8
  PP bracket_a = mono(5, 2, 4, 0) + mono(-12, 0, 4, 0) + mono(10, 2, 3, 0) + mono(-72, 0, 3, 0) +
                 mono(-7, 2, 2, 0) + mono(-116, 0, 2, 0) + mono(-32, 0, 1, 0) + mono(8, 0, 0, 0);
  PP d = mono(3, 0, 2, 0) + mono(6, 0, 1, 0) + mono(-1, 0, 0, 0);
  PP mu_quad = (PP::var_mu() + PP::constant(Rational(1))) * (PP::var_mu() + PP::constant(Rational(2)));
  PP ap1 = PP::var_a() + PP::constant(Rational(1));
  // (A - B) * 8 pi^(mu+1) a^2 (3a^2+6a-1)^2 (mu+1)(mu+2) / (2^mu (a+1)^mu)
  //   = bracket_a * d * (mu+1)(mu+2) - 32 pi^2 a^2 (a+1)^4
  PP second = mono(32, 2, 2, 0) * ap1.pow(4);
  return bracket_a * d * mu_quad - second;
}

AbStepReport ab_bounds_step(int a, int mu) {
  if (a < 3 || mu < 3) throw std::invalid_argument("ab_bounds_step: a >= 3, mu >= 3");
  AbStepReport r;
  r.a = a;
  r.mu = mu;
  double A = a;
  double d = 3 * A * A + 6 * A - 1;
  double lead = std::pow(2 * (A + 1) / kPi, mu);
  double bracket = (5 * kPi * kPi - 12) * pow_di(A, 4) + (10 * kPi * kPi - 72) * pow_di(A, 3) -
                   (7 * kPi * kPi + 116) * A * A - 32 * A + 8;
  r.A = lead * bracket / (8 * kPi * A * A * d);
  r.B = lead * 4 * pow_di(A + 1, 4) * kPi / ((mu + 1.0) * (mu + 2.0) * d * d);
  static const PiPolynomial shifted = step_difference_polynomial().shift_a(3).shift_mu(3);
  r.shifted = shifted.certify_positive();
  r.pass = r.A > r.B && r.shifted.all_positive;
  return r;
}

PiPolynomial base_difference_polynomial() {
  using PP = PiPolynomial;
  PP ap1 = PP::var_a() + PP::constant(Rational(1));
  auto am = [](long long c, int pi_pow, bool rt2, int a_pow) {
    return PP::monomial(Rational(c), pi_pow, rt2, a_pow, 0);
  };
  // (A - B) * 120 pi^4 a^5 / (a+1), term by term:
  //   6(a+1)^7/(pi^4 a^5)      -> 720 (a+1)^6
  //   pi (a+1)^3 / 5           -> 24 pi^5 a^5 (a+1)^2
  //   -2(a+1)^5/(pi a^2)       -> -240 pi^3 a^3 (a+1)^4
  //   3(a+1)^7/(pi^3 a^4)      -> 360 pi a (a+1)^6
  //   (a+1)^3/pi               -> 120 pi^3 a^5 (a+1)^2
  //   -3(a+1)^3/(2 pi^3)       -> -180 pi a^5 (a+1)^2
  //   -4(a+1)/(3 sqrt2)        -> -80 sqrt2 pi^4 a^5
  //   -(a+1)^3/(12 sqrt2)      -> -5 sqrt2 pi^4 a^5 (a+1)^2
  return am(720, 0, false, 0) * ap1.pow(6) + am(24, 5, false, 5) * ap1.pow(2) +
         am(-240, 3, false, 3) * ap1.pow(4) + am(360, 1, false, 1) * ap1.pow(6) +
         am(120, 3, false, 5) * ap1.pow(2) + am(-180, 1, false, 5) * ap1.pow(2) +
         am(-80, 4, true, 5) + am(-5, 4, true, 5) * ap1.pow(2);
}

AbBaseReport ab_bounds_base(int a) {
  if (a < 3) throw std::invalid_argument("ab_bounds_base: a >= 3");
  AbBaseReport r;
  r.a = a;
  double A = a;
  double u = A + 1;
  r.A = 6 * pow_di(u, 7) / (pow_di(kPi, 4) * pow_di(A, 5)) + kPi * u * u * u / 5 -
        2 * pow_di(u, 5) / (kPi * A * A) + 3 * pow_di(u, 7) / (pow_di(kPi, 3) * pow_di(A, 4)) +
        u * u * u / kPi - 3 * u * u * u / (2 * pow_di(kPi, 3));
  r.B = 4 * u / (3 * std::sqrt(2.0)) + u * u * u / (12 * std::sqrt(2.0));
  static const PiPolynomial poly = base_difference_polynomial();
  static const PiPolynomial shifted = poly.shift_a(3);
  r.degree = poly.degree_a();
  r.shifted = shifted.certify_positive();
  r.pass = r.A > r.B && r.degree == 7 && r.shifted.all_positive;
  return r;
}

}  // namespace kostka
