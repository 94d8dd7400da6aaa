#include "fanodelta/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "fanodelta/errors.hpp"

namespace fanodelta {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::identity() { return monomial(1, 1); }

Polynomial Polynomial::shifted_power(const Rational& shift, unsigned power) {
  std::vector<Rational> coeffs(power + 1);
  for (unsigned k = 0; k <= power; ++k) {
    coeffs[k] = binomial(power, k) * shift.pow(static_cast<int>(power - k));
  }
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational{}; }

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rational(k);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + 1] = coeffs_[k] / Rational(k + 1);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial remainder = *this;
  if (degree() < divisor.degree()) return {Polynomial{}, remainder};
  std::vector<Rational> quotient(static_cast<std::size_t>(degree() - divisor.degree()) + 1);
  const Rational& lead = divisor.coeffs_.back();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    const auto shift = static_cast<unsigned>(remainder.degree() - divisor.degree());
    const Rational factor = remainder.coeffs_.back() / lead;
    quotient[shift] = factor;
    remainder -= monomial(factor, shift) * divisor;
  }
  return {Polynomial(std::move(quotient)), remainder};
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) os << mag;
    if (k >= 1) os << (k == 0 || unit ? "" : "*") << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Rational integrate_definite(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (lo > hi) {
    throw DomainError("integration bounds must satisfy lo <= hi, got lo=" + lo.str() + ", hi=" + hi.str());
  }
  const Polynomial anti = p.antiderivative();
  return anti(hi) - anti(lo);
}

Rational abs_bound_on(const Polynomial& p, const Rational& hi) {
  if (hi.sign() < 0) throw DomainError("abs_bound_on requires hi >= 0");
  Rational acc;
  Rational power = 1;
  for (const auto& c : p.coefficients()) {
    acc += c.abs() * power;
    power *= hi;
  }
  return acc;
}

namespace {

int sign_changes(const std::vector<Polynomial>& chain, const Rational& t) {
  int changes = 0;
  int previous = 0;
  for (const auto& p : chain) {
    const int s = p(t).sign();
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

}  // namespace

int count_distinct_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("count_distinct_roots of the zero polynomial");
  if (!(lo < hi)) throw DomainError("count_distinct_roots requires lo < hi");
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto [q, r] = chain[chain.size() - 2].divmod(chain.back());
    chain.push_back(-r);
  }
  chain.pop_back();
  // divide out gcd(p, p') so repeated roots count once
  const Polynomial g = chain.back();
  if (g.degree() > 0) {
    for (auto& q : chain) q = q.divmod(g).first;
  }
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
}

Rational RationalFunction::operator()(const Rational& t) const {
  const Rational d = den_(t);
  if (d.is_zero()) throw DomainError("rational function has a pole at t=" + t.str());
  return num_(t) / d;
}

RationalFunction RationalFunction::derivative() const {
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("rational function division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

}  // namespace fanodelta
