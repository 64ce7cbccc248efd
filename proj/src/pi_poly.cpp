#include "kostka/pi_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kostka {

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

RatInterval pi_enclosure() {
  static const Rational ten29 = [] {
    Rational t = 1;
    for (int i = 0; i < 29; ++i) t *= 10;
    return t;
  }();
  Rational lo = Rational(KostkaValue("314159265358979323846264338327")) / ten29;
  return {lo, lo + 1 / ten29};
}

RatInterval sqrt2_enclosure() {
  static const Rational ten29 = [] {
    Rational t = 1;
    for (int i = 0; i < 29; ++i) t *= 10;
    return t;
  }();
  Rational lo = Rational(KostkaValue("141421356237309504880168872420")) / ten29;
  return {lo, lo + 1 / ten29};
}

PiCoeff PiCoeff::rational(Rational c) {
  PiCoeff out;
  if (c != 0) out.plain_.push_back(std::move(c));
  return out;
}

PiCoeff PiCoeff::pi_power(int k, Rational c, bool with_sqrt2) {
  PiCoeff out;
  if (c == 0) return out;
  auto& side = with_sqrt2 ? out.rt2_ : out.plain_;
  side.assign(static_cast<std::size_t>(k) + 1, Rational(0));
  side.back() = std::move(c);
  return out;
}

void PiCoeff::trim() {
  while (!plain_.empty() && plain_.back() == 0) plain_.pop_back();
  while (!rt2_.empty() && rt2_.back() == 0) rt2_.pop_back();
}

PiCoeff& PiCoeff::operator+=(const PiCoeff& o) {
  if (plain_.size() < o.plain_.size()) plain_.resize(o.plain_.size(), Rational(0));
  for (std::size_t k = 0; k < o.plain_.size(); ++k) plain_[k] += o.plain_[k];
  if (rt2_.size() < o.rt2_.size()) rt2_.resize(o.rt2_.size(), Rational(0));
  for (std::size_t k = 0; k < o.rt2_.size(); ++k) rt2_[k] += o.rt2_[k];
  trim();
  return *this;
}

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Rational> poly_add(std::vector<Rational> a, const std::vector<Rational>& b,
                               const Rational& scale = Rational(1)) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k] * scale;
  return a;
}

Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

PiCoeff PiCoeff::operator*(const PiCoeff& o) const {
  PiCoeff out;
  // (p + s2 r)(p' + s2 r') = pp' + 2 rr' + s2 (pr' + rp')
  out.plain_ = poly_add(poly_mul(plain_, o.plain_), poly_mul(rt2_, o.rt2_), Rational(2));
  out.rt2_ = poly_add(poly_mul(plain_, o.rt2_), poly_mul(rt2_, o.plain_));
  out.trim();
  return out;
}

PiCoeff PiCoeff::operator-() const {
  PiCoeff out = *this;
  for (auto& c : out.plain_) c = -c;
  for (auto& c : out.rt2_) c = -c;
  return out;
}

bool PiCoeff::is_zero() const { return plain_.empty() && rt2_.empty(); }

Rational PiCoeff::eval(const Rational& pi_value, const Rational& sqrt2_value) const {
  return poly_eval(plain_, pi_value) + sqrt2_value * poly_eval(rt2_, pi_value);
}

RatInterval PiCoeff::enclose(const RatInterval& pi_i, const RatInterval& sqrt2_i) const {
  RatInterval acc(Rational(0));
  RatInterval power(Rational(1));
  std::size_t top = std::max(plain_.size(), rt2_.size());
  for (std::size_t k = 0; k < top; ++k) {
    if (k < plain_.size() && plain_[k] != 0) acc = acc + power.scaled(plain_[k]);
    if (k < rt2_.size() && rt2_[k] != 0) acc = acc + (power * sqrt2_i).scaled(rt2_[k]);
    power = power * pi_i;
  }
  return acc;
}

std::string PiCoeff::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < plain_.size(); ++k) {
    if (plain_[k] == 0) continue;
    out << (first ? "" : " + ") << plain_[k].str();
    if (k) out << "*pi^" << k;
    first = false;
  }
  for (std::size_t k = 0; k < rt2_.size(); ++k) {
    if (rt2_[k] == 0) continue;
    out << (first ? "" : " + ") << rt2_[k].str() << "*sqrt2";
    if (k) out << "*pi^" << k;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

void PiPolynomial::ensure(int a_pow, int mu_pow) {
  if (static_cast<int>(coeff_.size()) <= a_pow) coeff_.resize(static_cast<std::size_t>(a_pow) + 1);
  for (auto& row : coeff_) {
    if (static_cast<int>(row.size()) <= mu_pow) row.resize(static_cast<std::size_t>(mu_pow) + 1);
  }
}

void PiPolynomial::trim() {
  for (auto& row : coeff_) {
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  }
  while (!coeff_.empty() && coeff_.back().empty()) coeff_.pop_back();
}

PiPolynomial PiPolynomial::constant(PiCoeff c) {
  PiPolynomial p;
  if (!c.is_zero()) {
    p.coeff_.resize(1);
    p.coeff_[0].push_back(std::move(c));
  }
  return p;
}

PiPolynomial PiPolynomial::monomial(Rational c, int pi_pow, bool with_sqrt2, int a_pow,
                                    int mu_pow) {
  PiPolynomial p;
  if (c == 0) return p;
  p.ensure(a_pow, mu_pow);
  p.coeff_[static_cast<std::size_t>(a_pow)][static_cast<std::size_t>(mu_pow)] =
      PiCoeff::pi_power(pi_pow, std::move(c), with_sqrt2);
  p.trim();
  return p;
}

PiPolynomial PiPolynomial::operator+(const PiPolynomial& o) const {
  PiPolynomial out = *this;
  for (std::size_t i = 0; i < o.coeff_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeff_[i].size(); ++j) {
      if (o.coeff_[i][j].is_zero()) continue;
      out.ensure(static_cast<int>(i), static_cast<int>(j));
      out.coeff_[i][j] += o.coeff_[i][j];
    }
  }
  out.trim();
  return out;
}

PiPolynomial PiPolynomial::operator-(const PiPolynomial& o) const {
  PiPolynomial neg = o;
  for (auto& row : neg.coeff_) {
    for (auto& c : row) c = -c;
  }
  return *this + neg;
}

PiPolynomial PiPolynomial::operator*(const PiPolynomial& o) const {
  PiPolynomial out;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    for (std::size_t j = 0; j < coeff_[i].size(); ++j) {
      if (coeff_[i][j].is_zero()) continue;
      for (std::size_t k = 0; k < o.coeff_.size(); ++k) {
        for (std::size_t l = 0; l < o.coeff_[k].size(); ++l) {
          if (o.coeff_[k][l].is_zero()) continue;
          out.ensure(static_cast<int>(i + k), static_cast<int>(j + l));
          out.coeff_[i + k][j + l] += coeff_[i][j] * o.coeff_[k][l];
        }
      }
    }
  }
  out.trim();
  return out;
}

PiPolynomial PiPolynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("PiPolynomial::pow: negative exponent");
  PiPolynomial out = constant(Rational(1));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

namespace {

std::vector<std::vector<Rational>> binomials(int n) {
  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Rational(1));
    for (int j = 1; j < i; ++j) {
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
  }
  return c;
}

}  // namespace

PiPolynomial PiPolynomial::shift_a(int s) const {
  // a^i -> sum_k C(i,k) s^(i-k) a^k
  auto C = binomials(degree_a());
  PiPolynomial out;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    Rational s_pow = 1;
    for (std::size_t k = i + 1; k-- > 0;) {
      // iterate i-k = 0, 1, ... so s_pow tracks s^(i-k)
      for (std::size_t j = 0; j < coeff_[i].size(); ++j) {
        if (coeff_[i][j].is_zero()) continue;
        PiCoeff term = coeff_[i][j] * PiCoeff::rational(C[i][k] * s_pow);
        out.ensure(static_cast<int>(k), static_cast<int>(j));
        out.coeff_[k][j] += term;
      }
      s_pow *= s;
    }
  }
  out.trim();
  return out;
}

PiPolynomial PiPolynomial::shift_mu(int s) const {
  int dmu = degree_mu();
  auto C = binomials(dmu);
  PiPolynomial out;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    for (std::size_t j = 0; j < coeff_[i].size(); ++j) {
      if (coeff_[i][j].is_zero()) continue;
      Rational s_pow = 1;
      for (std::size_t k = j + 1; k-- > 0;) {
        PiCoeff term = coeff_[i][j] * PiCoeff::rational(C[j][k] * s_pow);
        out.ensure(static_cast<int>(i), static_cast<int>(k));
        out.coeff_[i][k] += term;
        s_pow *= s;
      }
    }
  }
  out.trim();
  return out;
}

int PiPolynomial::degree_a() const { return coeff_.empty() ? 0 : static_cast<int>(coeff_.size()) - 1; }

int PiPolynomial::degree_mu() const {
  std::size_t d = 0;
  for (const auto& row : coeff_) d = std::max(d, row.size());
  return d == 0 ? 0 : static_cast<int>(d) - 1;
}

const PiCoeff& PiPolynomial::coefficient(int a_pow, int mu_pow) const {
  static const PiCoeff zero;
  if (a_pow < 0 || a_pow >= static_cast<int>(coeff_.size())) return zero;
  const auto& row = coeff_[static_cast<std::size_t>(a_pow)];
  if (mu_pow < 0 || mu_pow >= static_cast<int>(row.size())) return zero;
  return row[static_cast<std::size_t>(mu_pow)];
}

Rational PiPolynomial::eval(const Rational& a, const Rational& mu, const Rational& pi_value,
                            const Rational& sqrt2_value) const {
  Rational acc = 0;
  Rational a_pow = 1;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    Rational mu_pow = 1;
    for (std::size_t j = 0; j < coeff_[i].size(); ++j) {
      if (!coeff_[i][j].is_zero()) {
        acc += a_pow * mu_pow * coeff_[i][j].eval(pi_value, sqrt2_value);
      }
      mu_pow *= mu;
    }
    a_pow *= a;
  }
  return acc;
}

CoefficientPositivity PiPolynomial::certify_positive(const RatInterval& pi_i,
                                                     const RatInterval& sqrt2_i) const {
  CoefficientPositivity report;
  report.all_positive = true;
  report.degree_x = degree_a();
  report.degree_y = degree_mu();
  bool first = true;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    for (std::size_t j = 0; j < coeff_[i].size(); ++j) {
      if (coeff_[i][j].is_zero()) continue;
      ++report.n_coefficients;
      RatInterval e = coeff_[i][j].enclose(pi_i, sqrt2_i);
      double lo = static_cast<double>(e.lo);
      if (first || lo < report.min_lower_bound) report.min_lower_bound = lo;
      first = false;
      if (!(e.lo > 0)) {
        report.all_positive = false;
        if (report.offending_monomial.empty()) {
          report.offending_monomial =
              "x^" + std::to_string(i) + " y^" + std::to_string(j) + " : " +
              coeff_[i][j].to_string();
        }
      }
    }
  }
  return report;
}

}  // namespace kostka
