#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fanodelta/rational.hpp"

namespace fanodelta {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coefficients()[k] multiplies t^k. The highest stored coefficient is
/// nonzero; the zero polynomial stores nothing and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned degree);
  /// The identity polynomial t.
  static Polynomial identity();
  /// (t + shift)^power, expanded with binomial coefficients.
  static Polynomial shifted_power(const Rational& shift, unsigned power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of t^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const;

  Rational operator()(const Rational& t) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  Polynomial pow(unsigned exponent) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division: returns (quotient, remainder). Throws on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Human-readable form in the variable `var`, highest degree first.
  std::string str(const std::string& var = "t") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Exact definite integral of p over [lo, hi]. Throws DomainError when lo > hi.
Rational integrate_definite(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Upper bound for |p(t)| on [0, hi] (hi >= 0): the sum of |c_k| hi^k.
Rational abs_bound_on(const Polynomial& p, const Rational& hi);

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// counted with a Sturm sequence. p must be nonzero, lo < hi, and lo must
/// not itself be a root.
int count_distinct_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Quotient of two polynomials; denominators are never reduced, only
/// checked to be nonzero at evaluation points.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);
  RationalFunction(const Polynomial& p)  // NOLINT(google-explicit-constructor)
      : num_(p), den_(Polynomial::constant(1)) {}

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws DomainError where the denominator vanishes.
  Rational operator()(const Rational& t) const;
  RationalFunction derivative() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

 private:
  Polynomial num_;
  Polynomial den_;
};

/// True when a and b agree as rational functions (cross-multiplied numerators match).
bool equivalent(const RationalFunction& a, const RationalFunction& b);

}  // namespace fanodelta
