#include "fanodelta/calabi.hpp"

#include <sstream>

#include "fanodelta/bundle.hpp"
#include "fanodelta/errors.hpp"

namespace fanodelta {

namespace {

void validate_nr(int n, const Rational& r) {
  if (n < 1) throw DomainError("n must be a positive integer, got " + std::to_string(n));
  if (r <= Rational(1)) throw DomainError("r must satisfy r>1, got r=" + r.str());
}

Polynomial linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

}  // namespace

CalabiProfile solve_profile(int n, const Rational& r, const Rational& beta) {
  validate_nr(n, r);
  if (beta.sign() <= 0) throw DomainError("beta must be > 0, got " + beta.str());
  const Rational lo = r - 1;
  const Rational hi = r + 1;
  const Rational span = hi.pow(n + 1) - lo.pow(n + 1);

  CalabiProfile out;
  out.n = n;
  out.r = r;
  out.beta = beta;
  out.c1 = beta / Rational(n + 2) * (hi.pow(n + 2) - lo.pow(n + 2)) / span;
  out.c2 = -Rational(2) * beta / Rational(n + 2) * (r * r - 1).pow(n + 1) / span;
  out.numerator = Polynomial::monomial(-beta / Rational(n + 2), n + 2) + Polynomial::monomial(out.c1, n + 1) +
                  Polynomial::constant(out.c2);
  return out;
}

RationalFunction profile_phi(int n, const Polynomial& numerator) {
  return RationalFunction(numerator, Polynomial::monomial(1, n));
}

RationalFunction ode_residual(const CalabiProfile& profile) {
  const RationalFunction phi = profile_phi(profile.n, profile.numerator);
  const RationalFunction tau = Polynomial::identity();
  const RationalFunction inner = RationalFunction(Polynomial::constant(profile.n)) * phi / tau + phi.derivative();
  return RationalFunction(Polynomial::constant(0)) - inner.derivative() -
         RationalFunction(Polynomial::constant(profile.beta));
}

Rational profile_slope(int n, const Polynomial& numerator, const Rational& tau) {
  if (tau.sign() <= 0) throw DomainError("tau must be > 0, got " + tau.str());
  return numerator.derivative()(tau) / tau.pow(n) - Rational(n) * numerator(tau) / tau.pow(n + 1);
}

EdgeAngles edge_angles(const CalabiProfile& profile) {
  EdgeAngles out;
  out.beta1 = profile_slope(profile.n, profile.numerator, profile.r - 1);
  out.beta2 = -profile_slope(profile.n, profile.numerator, profile.r + 1);

  const Rational b0 = beta_zero(profile.n, profile.r);
  const Rational closed1 = profile.beta / b0;
  const Rational closed2 = profile.beta * (Rational(2) * b0 - 1) / b0;
  if (out.beta1 != closed1 || out.beta2 != closed2) {
    throw OracleDisagreement("edge angles: derivative gives (" + out.beta1.str() + ", " + out.beta2.str() +
                             "), closed form gives (" + closed1.str() + ", " + closed2.str() + ")");
  }
  return out;
}

Rational ricci_bound_margin(const CalabiProfile& profile, const Rational& mu) {
  if (mu.sign() <= 0) throw DomainError("mu must be > 0, got " + mu.str());
  const Rational b0 = beta_zero(profile.n, profile.r);
  return mu - profile.beta / (profile.r * b0) - profile.beta * (Rational(1) - profile.r.reciprocal());
}

RationalFunction ricci_bound_excess(const CalabiProfile& profile, const Rational& mu) {
  if (mu.sign() <= 0) throw DomainError("mu must be > 0, got " + mu.str());
  const RationalFunction phi = profile_phi(profile.n, profile.numerator);
  const RationalFunction tau = Polynomial::identity();
  const RationalFunction inv_r = Polynomial::constant(profile.r.reciprocal());
  return RationalFunction(Polynomial::constant(mu)) -
         RationalFunction(Polynomial::constant(profile.n)) * inv_r * phi / tau - inv_r * phi.derivative() -
         RationalFunction(Polynomial::monomial(profile.beta / profile.r, 1));
}

bool satisfies_beta_condition(int n, const Rational& r, const Rational& beta, const Rational& mu) {
  validate_nr(n, r);
  if (mu.sign() <= 0 || mu > Rational(1) || beta.sign() <= 0) return false;
  const Rational b0 = beta_zero(n, r);
  return beta <= min(mu * b0 / smooth_delta_threshold(n, r), b0);
}

std::vector<std::string> admissibility_failures(const AdmissibleProfile& profile) {
  validate_nr(profile.n, profile.r);
  const Rational lo = profile.r - 1;
  const Rational hi = profile.r + 1;
  std::vector<std::string> out;
  auto expect = [&out](const std::string& what, const Rational& got, const Rational& want) {
    if (got != want) out.push_back(what + " = " + got.str() + ", expected " + want.str());
  };
  expect("phi(r-1)", profile.numerator(lo), 0);
  expect("phi(r+1)", profile.numerator(hi), 0);
  expect("phi'(r-1)", profile_slope(profile.n, profile.numerator, lo), 1);
  expect("phi'(r+1)", profile_slope(profile.n, profile.numerator, hi), -1);
  if (out.empty() && !phi_positive(profile.numerator, profile.r)) {
    out.push_back("phi is not positive on (r-1, r+1)");
  }
  return out;
}

AdmissibleProfile hermite_profile(int n, const Rational& r) {
  validate_nr(n, r);
  const Rational lo = r - 1;
  const Rational hi = r + 1;
  const Rational at_lo = lo.pow(n) / 2;
  const Rational slope = (hi.pow(n) / 2 - at_lo) / (hi - lo);
  const Polynomial ell = linear(at_lo - slope * lo, slope);

  AdmissibleProfile out;
  out.n = n;
  out.r = r;
  out.numerator = linear(-lo, 1) * linear(hi, -1) * ell;
  return out;
}

AdmissibleProfile perturbed(const AdmissibleProfile& profile, const Rational& eps, const Polynomial& s) {
  const Polynomial bump = (linear(-(profile.r - 1), 1) * linear(-(profile.r + 1), 1)).pow(2);
  AdmissibleProfile out = profile;
  out.numerator += eps * bump * s;
  return out;
}

bool phi_positive(const Polynomial& numerator, const Rational& r) {
  if (numerator.is_zero()) return false;
  const Rational lo = r - 1;
  const Rational hi = r + 1;
  Polynomial reduced = numerator;
  for (const Rational& root : {lo, hi}) {
    const Polynomial factor = linear(-root, 1);
    while (reduced.degree() > 0 && reduced(root).is_zero()) reduced = reduced.divmod(factor).first;
  }
  if (count_distinct_roots(reduced, lo, hi) != 0) return false;
  return numerator(r).sign() > 0;
}

Polynomial futaki_integrand(int n, const Rational& r, const Polynomial& numerator) {
  const Polynomial inner = Polynomial::monomial(Rational(n) * r, n) -
                           Polynomial::identity() * numerator.derivative().derivative() -
                           Polynomial::monomial(n + 1, n + 1);
  return Rational(n + 1) * inner;
}

Rational futaki_invariant(const AdmissibleProfile& profile) {
  const auto failures = admissibility_failures(profile);
  if (!failures.empty()) {
    std::string msg = "profile is not admissible:";
    for (const auto& f : failures) msg += " " + f + ";";
    msg.pop_back();
    throw DomainError(msg);
  }
  return integrate_definite(futaki_integrand(profile.n, profile.r, profile.numerator), profile.r - 1,
                            profile.r + 1);
}

Rational futaki_closed_form(int n, const Rational& r) {
  validate_nr(n, r);
  return (beta_zero(n, r).reciprocal() - 1) * ((r + 1).pow(n + 1) - (r - 1).pow(n + 1));
}

std::string profile_csv(const CalabiProfile& profile, int samples) {
  if (samples < 2) throw DomainError("samples must be >= 2, got " + std::to_string(samples));
  const RationalFunction phi = profile_phi(profile.n, profile.numerator);
  std::ostringstream os;
  os << "tau,phi\n";
  for (int j = 0; j < samples; ++j) {
    const Rational tau = profile.r - 1 + Rational(2 * j, samples - 1);
    os << tau.decimal(12) << ',' << phi(tau).decimal(12) << '\n';
  }
  return os.str();
}

}  // namespace fanodelta
