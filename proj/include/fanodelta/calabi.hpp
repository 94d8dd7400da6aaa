#pragma once

#include <string>
#include <vector>

#include "fanodelta/polynomial.hpp"
#include "fanodelta/rational.hpp"

namespace fanodelta {

/// Units: L^n = 1 and all factors of 2 pi dropped, so every identity below is
/// an exact rational identity.

/// Momentum profile phi(tau) = numerator(tau) / tau^n on [r-1, r+1] solving
/// -(n phi / tau + phi')' = beta, with
///   numerator = -(beta/(n+2)) tau^{n+2} + c1 tau^{n+1} + c2.
struct CalabiProfile {
  int n = 1;
  Rational r;
  Rational beta;
  Rational c1;
  Rational c2;
  Polynomial numerator;
};

/// Requires n >= 1, r > 1, beta > 0.
CalabiProfile solve_profile(int n, const Rational& r, const Rational& beta);

/// phi as a rational function of tau.
RationalFunction profile_phi(int n, const Polynomial& numerator);

/// -(n phi / tau + phi')' - beta; identically zero for a solved profile.
RationalFunction ode_residual(const CalabiProfile& profile);

/// phi'(tau) at an endpoint tau > 0, from the numerator.
Rational profile_slope(int n, const Polynomial& numerator, const Rational& tau);

struct EdgeAngles {
  Rational beta1;  // phi'(r-1)
  Rational beta2;  // -phi'(r+1)
};

/// Differentiates the profile and compares with beta/beta_0 and
/// beta(2 beta_0 - 1)/beta_0; throws OracleDisagreement on a mismatch.
EdgeAngles edge_angles(const CalabiProfile& profile);

/// mu - beta/(r beta_0) - beta(1 - 1/r).
Rational ricci_bound_margin(const CalabiProfile& profile, const Rational& mu);

/// mu - n phi/(r tau) - phi'/r - beta tau / r, which reduces to the constant margin.
RationalFunction ricci_bound_excess(const CalabiProfile& profile, const Rational& mu);

/// 0 < beta <= min{ mu beta_0 / (1/r + beta_0 (1 - 1/r)), beta_0 } with 0 < mu <= 1.
bool satisfies_beta_condition(int n, const Rational& r, const Rational& beta, const Rational& mu);

/// Profile with phi(r+-1) = 0, phi'(r-1) = 1, phi'(r+1) = -1 and phi > 0 inside.
struct AdmissibleProfile {
  int n = 1;
  Rational r;
  Polynomial numerator;
};

/// Human-readable list of the boundary conditions the profile violates.
std::vector<std::string> admissibility_failures(const AdmissibleProfile& profile);

/// numerator = (tau - (r-1)) ((r+1) - tau) l(tau), l linear with
/// l(r-1) = (r-1)^n / 2 and l(r+1) = (r+1)^n / 2.
AdmissibleProfile hermite_profile(int n, const Rational& r);

/// Adds eps (tau-(r-1))^2 (tau-(r+1))^2 s(tau); boundary data is unchanged.
AdmissibleProfile perturbed(const AdmissibleProfile& profile, const Rational& eps, const Polynomial& s);

/// True when numerator > 0 on the open interval (r-1, r+1), decided with an
/// exact Sturm count after removing the endpoint roots.
bool phi_positive(const Polynomial& numerator, const Rational& r);

/// Integrand in tau of the normalized Futaki invariant:
///   (n+1) [ n r tau^n - tau numerator'' - (n+1) tau^{n+1} ].
Polynomial futaki_integrand(int n, const Rational& r, const Polynomial& numerator);

/// Exact integral of futaki_integrand over [r-1, r+1]. Throws DomainError
/// listing admissibility failures.
Rational futaki_invariant(const AdmissibleProfile& profile);

/// (1/beta_0 - 1) ((r+1)^{n+1} - (r-1)^{n+1}).
Rational futaki_closed_form(int n, const Rational& r);

/// (tau, phi(tau)) at `samples` evenly spaced points of [r-1, r+1], as CSV.
std::string profile_csv(const CalabiProfile& profile, int samples);

}  // namespace fanodelta
