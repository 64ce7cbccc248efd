#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kostka/pi_poly.hpp"

using namespace kostka;

namespace {

// pi is a free variable, so ring identities hold at any rational pi value;
// sqrt2 carries the relation sqrt2^2 = 2, so products with sqrt2 parts are
// exercised separately
PiPolynomial sample_p() {
  // 3 a^2 mu - 7 pi a + pi^2
  return PiPolynomial::monomial(3, 0, false, 2, 1) + PiPolynomial::monomial(-7, 1, false, 1, 0) +
         PiPolynomial::monomial(1, 2, false, 0, 0);
}

PiPolynomial sample_rt2() {
  // 3 a^2 mu - 7 pi a + sqrt2 pi^2
  return PiPolynomial::monomial(3, 0, false, 2, 1) + PiPolynomial::monomial(-7, 1, false, 1, 0) +
         PiPolynomial::monomial(1, 2, true, 0, 0);
}

PiPolynomial sample_q() {
  // a mu^2 - 2 + pi^3 mu
  return PiPolynomial::monomial(1, 0, false, 1, 2) + PiPolynomial::monomial(-2, 0, false, 0, 0) +
         PiPolynomial::monomial(1, 3, false, 0, 1);
}

const Rational kA(7, 3), kMu(-5, 2), kPiV(311, 99), kRt2(17, 12);

}  // namespace

TEST_CASE("enclosures bracket the constants") {
  RatInterval pi = pi_enclosure();
  CHECK(static_cast<double>(pi.lo) <= 3.14159265358979323846);
  CHECK(static_cast<double>(pi.hi) >= 3.14159265358979323846);
  CHECK(pi.hi - pi.lo > 0);
  CHECK(static_cast<double>(pi.hi - pi.lo) < 1e-28);
  RatInterval rt2 = sqrt2_enclosure();
  CHECK(rt2.lo * rt2.lo < 2);
  CHECK(rt2.hi * rt2.hi > 2);
}

TEST_CASE("interval multiplication covers sign mixes") {
  RatInterval a(Rational(-2), Rational(3));
  RatInterval b(Rational(-5), Rational(1));
  RatInterval c = a * b;
  CHECK(c.lo == -15);
  CHECK(c.hi == 10);
}

TEST_CASE("arithmetic is exact on rational points") {
  PiPolynomial p = sample_p(), q = sample_q();
  Rational pv = p.eval(kA, kMu, kPiV, kRt2);
  Rational qv = q.eval(kA, kMu, kPiV, kRt2);
  CHECK((p + q).eval(kA, kMu, kPiV, kRt2) == pv + qv);
  CHECK((p - q).eval(kA, kMu, kPiV, kRt2) == pv - qv);
  CHECK((p * q).eval(kA, kMu, kPiV, kRt2) == pv * qv);
  CHECK(p.pow(3).eval(kA, kMu, kPiV, kRt2) == pv * pv * pv);

  // addition stays a homomorphism even with sqrt2 parts
  PiPolynomial r = sample_rt2();
  Rational rv = r.eval(kA, kMu, kPiV, kRt2);
  CHECK((r + q).eval(kA, kMu, kPiV, kRt2) == rv + qv);
  CHECK((r - q).eval(kA, kMu, kPiV, kRt2) == rv - qv);
}

TEST_CASE("sqrt2 products fold through the relation") {
  // (c + s2 d)(c' + s2 d') = (cc' + 2dd') + s2(cd' + dc'); spot check
  // (1 + s2)(3 - 2 s2) = -1 + s2
  PiPolynomial x = PiPolynomial::monomial(1, 0, false, 0, 0) +
                   PiPolynomial::monomial(1, 0, true, 0, 0);
  PiPolynomial y = PiPolynomial::monomial(3, 0, false, 0, 0) +
                   PiPolynomial::monomial(-2, 0, true, 0, 0);
  PiPolynomial expect = PiPolynomial::monomial(-1, 0, false, 0, 0) +
                        PiPolynomial::monomial(1, 0, true, 0, 0);
  PiPolynomial diff = x * y - expect;
  CHECK(diff.certify_positive().n_coefficients == 0);  // identically zero
}

TEST_CASE("sqrt2 squares away exactly") {
  PiPolynomial s = PiPolynomial::monomial(1, 0, true, 0, 0);
  PiPolynomial two = PiPolynomial::monomial(2, 0, false, 0, 0);
  CHECK((s * s - two).eval(kA, kMu, kPiV, kRt2) == 0);
}

TEST_CASE("shift substitutes exactly") {
  PiPolynomial p = sample_p();
  CHECK(p.shift_a(3).eval(kA, kMu, kPiV, kRt2) == p.eval(kA + 3, kMu, kPiV, kRt2));
  CHECK(p.shift_mu(3).eval(kA, kMu, kPiV, kRt2) == p.eval(kA, kMu + 3, kPiV, kRt2));
  CHECK(p.shift_a(3).shift_mu(3).eval(kA, kMu, kPiV, kRt2) ==
        p.eval(kA + 3, kMu + 3, kPiV, kRt2));
}

TEST_CASE("degrees") {
  PiPolynomial p = sample_p();
  CHECK(p.degree_a() == 2);
  CHECK(p.degree_mu() == 1);
  CHECK(p.shift_a(3).degree_a() == 2);
}

TEST_CASE("positivity certification") {
  // pi - 3 > 0 but 3 - pi < 0
  PiPolynomial up = PiPolynomial::monomial(1, 1, false, 0, 0) + PiPolynomial::constant(Rational(-3));
  auto good = up.certify_positive();
  CHECK(good.all_positive);
  CHECK(good.n_coefficients == 1);
  CHECK(good.min_lower_bound > 0.14);

  PiPolynomial down = PiPolynomial::constant(Rational(3)) - PiPolynomial::monomial(1, 1, false, 0, 0);
  auto bad = down.certify_positive();
  CHECK_FALSE(bad.all_positive);
  CHECK(bad.offending_monomial.find("x^0 y^0") == 0);

  // a zero coefficient (absent monomial) is not counted
  PiPolynomial sparse = PiPolynomial::monomial(5, 0, false, 2, 0) +
                        PiPolynomial::monomial(1, 0, false, 0, 0);
  auto s = sparse.certify_positive();
  CHECK(s.all_positive);
  CHECK(s.n_coefficients == 2);
}

TEST_CASE("cancellation trims to zero") {
  PiPolynomial p = sample_p();
  PiPolynomial z = p - p;
  CHECK(z.degree_a() == 0);
  CHECK(z.eval(kA, kMu, kPiV, kRt2) == 0);
  auto report = z.certify_positive();
  CHECK(report.n_coefficients == 0);
  CHECK(report.all_positive);  // vacuously
}
