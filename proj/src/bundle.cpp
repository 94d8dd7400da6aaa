#include "fanodelta/bundle.hpp"

#include "fanodelta/errors.hpp"

namespace fanodelta {

void validate_bundle_boundary(const FanoBase& base, const BundleBoundary& bdry) {
  base.validate();
  const Rational one = 1;
  if (base.r > one) {
    if (bdry.a.sign() < 0 || bdry.a >= one) {
      throw DomainError("a must satisfy 0<=a<1 when r>1, got a=" + bdry.a.str());
    }
  } else if (bdry.a <= one - base.r || bdry.a >= one) {
    throw DomainError("a must satisfy 1-r<a<1 when r<=1 (log Fano range), got a=" + bdry.a.str() +
                      ", r=" + base.r.str());
  }
  if (bdry.b.sign() < 0 || bdry.b >= one) {
    throw DomainError("b must satisfy 0<=b<1, got b=" + bdry.b.str());
  }
}

Rational bundle_lower_end(const Rational& r, const BundleBoundary& bdry) { return r - (Rational(1) - bdry.a); }

Rational bundle_upper_end(const Rational& r, const BundleBoundary& bdry) { return r + (Rational(1) - bdry.b); }

Rational centroid_phi(const Rational& A, const Rational& B, int n) {
  if (n < 0) throw DomainError("centroid_phi requires n >= 0, got " + std::to_string(n));
  if (A.sign() < 0) throw DomainError("centroid_phi requires A >= 0, got A=" + A.str());
  if (A >= B) throw DomainError("centroid_phi requires A < B, got A=" + A.str() + ", B=" + B.str());
  return Rational(n + 1, n + 2) * (B.pow(n + 2) - A.pow(n + 2)) / (B.pow(n + 1) - A.pow(n + 1));
}

Rational beta_zero(int n, const Rational& r) {
  if (n < 1) throw DomainError("n must be a positive integer, got " + std::to_string(n));
  if (r <= Rational(1)) throw DomainError("beta_0 requires r>1, got r=" + r.str());
  const Rational lower = r - 1;
  return (centroid_phi(lower, r + 1, n) - lower).reciprocal();
}

Rational smooth_delta_threshold(int n, const Rational& r) {
  const Rational b0 = beta_zero(n, r);
  return r.reciprocal() + b0 * (Rational(1) - r.reciprocal());
}

Rational s_v0(const FanoBase& base, const BundleBoundary& bdry) {
  validate_bundle_boundary(base, bdry);
  const Rational A = bundle_lower_end(base.r, bdry);
  return centroid_phi(A, bundle_upper_end(base.r, bdry), base.n) - A;
}

Rational s_vinf(const FanoBase& base, const BundleBoundary& bdry) {
  validate_bundle_boundary(base, bdry);
  const Rational B = bundle_upper_end(base.r, bdry);
  return B - centroid_phi(bundle_lower_end(base.r, bdry), B, base.n);
}

DeltaBreakdown bundle_delta(const FanoBase& base, const BundleBoundary& bdry) {
  validate_bundle_boundary(base, bdry);
  const Rational A = bundle_lower_end(base.r, bdry);
  const Rational B = bundle_upper_end(base.r, bdry);
  const Rational phi = centroid_phi(A, B, base.n);
  const Rational one = 1;
  return resolve_branches(base.delta, base.r / phi, (one - bdry.a) / (phi - A), (one - bdry.b) / (B - phi));
}

Rational smooth_threshold_relation(int n, const Rational& r, const DeltaKnowledge& delta) {
  if (!delta.is_exact()) throw DomainError("the two-branch smooth relation needs an exact delta(V)");
  const Rational b0 = beta_zero(n, r);
  const Rational base_branch = delta.value() * r * b0 / (Rational(1) + b0 * (r - 1));
  return min(base_branch, b0);
}

BetaForm bundle_beta_form(const FanoBase& base, const BundleBoundary& bdry) {
  validate_bundle_boundary(base, bdry);
  const Rational A = bundle_lower_end(base.r, bdry);
  const Rational B = bundle_upper_end(base.r, bdry);
  const Rational one = 1;
  BetaForm out;
  out.beta = (one - bdry.a) / (centroid_phi(A, B, base.n) - A);
  out.base_coefficient = base.r * out.beta / (one - bdry.a + A * out.beta);
  out.vinf_branch = (one - bdry.b) * out.beta / ((B - A) * out.beta - (one - bdry.a));
  return out;
}

}  // namespace fanodelta
