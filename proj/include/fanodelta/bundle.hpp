#pragma once

#include "fanodelta/delta.hpp"
#include "fanodelta/rational.hpp"

namespace fanodelta {

/// Boundary coefficients of (P(L^-1 + O), a V0 + b Vinf).
struct BundleBoundary {
  Rational a = 0;
  Rational b = 0;
};

/// Throws DomainError unless (a, b) lies in the log Fano range for base.r:
/// 0 <= a < 1 when r > 1, 1 - r < a < 1 when r <= 1, and 0 <= b < 1.
void validate_bundle_boundary(const FanoBase& base, const BundleBoundary& bdry);

/// A = r - (1 - a).
Rational bundle_lower_end(const Rational& r, const BundleBoundary& bdry);
/// B = r + (1 - b).
Rational bundle_upper_end(const Rational& r, const BundleBoundary& bdry);

/// Centroid of the measure t^n dt on [A, B]:
///   (n+1)/(n+2) * (B^{n+2} - A^{n+2}) / (B^{n+1} - A^{n+1}).
/// Requires 0 <= A < B and n >= 0; the result lies strictly between A and B.
Rational centroid_phi(const Rational& A, const Rational& B, int n);

/// beta_0 = 1 / (centroid_phi(r-1, r+1, n) - (r-1)), for r > 1. Always in (1/2, 1).
Rational beta_zero(int n, const Rational& r);

/// delta(V) threshold 1/r + beta_0 (1 - 1/r) at which the base branch and
/// beta_0 coincide in the smooth a = b = 0 formula.
Rational smooth_delta_threshold(int n, const Rational& r);

/// S-invariant of V0: centroid_phi(A, B, n) - A.
Rational s_v0(const FanoBase& base, const BundleBoundary& bdry);
/// S-invariant of Vinf: B - centroid_phi(A, B, n).
Rational s_vinf(const FanoBase& base, const BundleBoundary& bdry);

/// Three-branch delta invariant of the projectivised bundle:
///   min{ r delta(V) / Phi, (1-a) / (Phi - A), (1-b) / (B - Phi) }.
DeltaBreakdown bundle_delta(const FanoBase& base, const BundleBoundary& bdry);

/// Two-branch form min{ delta r beta_0 / (1 + beta_0 (r-1)), beta_0 } valid for
/// the smooth case a = b = 0. Requires r > 1 and an exact delta.
Rational smooth_threshold_relation(int n, const Rational& r, const DeltaKnowledge& delta);

/// The same three branches written through beta = beta_{a,b} alone:
///   { r delta beta / (1 - a + A beta), beta, (1-b) beta / ((B-A) beta - (1-a)) }.
/// base_coefficient omits the delta(V) factor.
struct BetaForm {
  Rational beta;
  Rational base_coefficient;
  Rational vinf_branch;
};
BetaForm bundle_beta_form(const FanoBase& base, const BundleBoundary& bdry);

}  // namespace fanodelta
