#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanodelta/delta.hpp"
#include "fanodelta/rational.hpp"

namespace fanodelta {

/// Boundary c V_inf on the projective cone, 0 <= c < 1.
struct ConeBoundary {
  Rational c = 0;
};

enum class ProofCoverage { Full, UpperBoundOnly };

std::string_view proof_coverage_name(ProofCoverage coverage);

struct ConeResult {
  DeltaBreakdown breakdown;
  Rational r_effective;
  /// Equality is established for 0 < r <= n+1; beyond that the value is an upper bound.
  ProofCoverage coverage = ProofCoverage::Full;
  /// Log discrepancy of the vertex divisor V0, equal to r.
  Rational v0_log_discrepancy;
};

/// Delta invariant of C_p(V, L) with boundary c V_inf:
///   min{ (n+2) r delta / ((n+1)(r+1-c)), (n+2) r / ((n+1)(r+1-c)), (n+2)(1-c) / (r+1-c) }.
ConeResult cone_delta(const FanoBase& base, const ConeBoundary& bdry);

/// Same formula with the base dimension allowed to be 0 (cone over a point
/// pair), used by the cone-over-divisor wrapper.
ConeResult cone_delta_dimension(int dim, const Rational& r, const DeltaKnowledge& delta, const Rational& c);

/// Branch values computed from the bundle S-invariants after the substitution
/// a = 1 - r, b = c (so A = 0, B = r + 1 - c), next to the cone branch values.
struct ConeBundleConsistency {
  Rational lower_end;  // A
  Rational upper_end;  // B
  Rational phi;
  Rational s_v0;
  Rational s_vinf;
  /// (base coefficient, v0, vinf) from each side.
  std::vector<Rational> bundle_side;
  std::vector<Rational> cone_side;
  bool matches = false;
};
ConeBundleConsistency cone_bundle_consistency(const FanoBase& base, const Rational& c);

/// Cone iterated i times over a smooth degree-d hypersurface of dimension n.
struct HypersurfaceConeSpec {
  int n = 1;
  int d = 2;
  int i = 1;
  DeltaKnowledge delta_v0 = DeltaKnowledge::at_least_one();
};

struct IteratedConeStep {
  int dim = 0;  // dimension of the base at this step
  Rational r;
  ConeResult result;
};

struct IteratedConeResult {
  Rational r0;
  Rational closed_form;
  Rational composition;
  std::vector<IteratedConeStep> steps;
};

void validate_hypersurface_cone(const HypersurfaceConeSpec& spec);

/// Closed form (n+2-d)(n+1+i) / ((n+1)(n+2+i-d)) * min(delta_0, 1).
Rational iterated_cone_closed_form(const HypersurfaceConeSpec& spec);

/// Evaluates both the closed form and the step-wise composition of cone_delta
/// (c = 0, updating dimension, slope and delta). Throws OracleDisagreement
/// when they differ.
IteratedConeResult iterated_hypersurface_delta(const HypersurfaceConeSpec& spec);

/// Cone over the cover branched along x_{n+1}^k x_{n+2}^{d-k} = g_d.
struct BranchedConeSpec {
  int n = 1;
  int k = 2;
  int d = 2;
  int l = 1;
};

struct SideCondition {
  std::string name;
  bool satisfied = false;
};

/// r = (n+1)k - (k-1)d.
Rational branched_slope(const BranchedConeSpec& spec);

/// Each side condition with its status: l<k, gcd(k,l)=1, k | dl-1, r>0.
std::vector<SideCondition> branched_side_conditions(const BranchedConeSpec& spec);

/// True when n+1 <= d <= n+2, where the branch pair is known to be K-semistable.
bool branched_pair_semistable_by_degree(const BranchedConeSpec& spec);

struct BranchedConeResult {
  ConeResult cone;
  std::vector<SideCondition> side_conditions;
  DeltaKnowledge delta_pair = DeltaKnowledge::at_least_one();
  bool delta_from_degree = false;
};

/// Throws DomainError listing every failed side condition. delta_pair may be
/// omitted only when n+1 <= d <= n+2.
BranchedConeResult branched_cone_delta(const BranchedConeSpec& spec,
                                       const std::optional<DeltaKnowledge>& delta_pair);

}  // namespace fanodelta
